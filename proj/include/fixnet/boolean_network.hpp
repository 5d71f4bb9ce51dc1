#pragma once

#include "fixnet/digraph.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fixnet {

/// A state packs component v into bit v. Dimension is carried by the
/// owning network or point set.
using State = std::uint32_t;

/// Local update function of one component: an ordered in-neighbor list and
/// a truth table with 2^d entries. Table index i is the input valuation
/// where the first listed input is the least significant bit.
struct NodeFunction {
    std::vector<int> inputs;
    std::vector<std::uint8_t> table;

    friend bool operator==(const NodeFunction&, const NodeFunction&) = default;
};

class BooleanNetwork {
public:
    BooleanNetwork() = default;
    BooleanNetwork(int n, std::vector<NodeFunction> nodes); // validates shapes

    int size() const { return n_; }
    const NodeFunction& node(int v) const { return nodes_[v]; }

    bool eval_component(int v, State x) const;
    State evaluate(State x) const;

    /// Digraph with the declared input lists as in-neighborhoods.
    Digraph declared_graph() const;

    friend bool operator==(const BooleanNetwork&, const BooleanNetwork&) = default;

private:
    int n_ = 0;
    std::vector<NodeFunction> nodes_;
};

class PointSet; // poset.hpp
class SignedDigraph; // signed_digraph.hpp

/// All fixed points, enumerated over the 2^n states (64 per block,
/// bit-parallel for in-degrees up to six). Throws past the cap.
PointSet fixed_points(const BooleanNetwork& f, const Limits& lim = default_limits());
long long count_fixed_points(const BooleanNetwork& f, const Limits& lim = default_limits());

/// Arc uv present iff flipping u changes f_v for some input; a declared but
/// inessential input produces no arc.
Digraph interaction_graph(const BooleanNetwork& f);

/// Per-arc sign: +1 / -1 for uniformly isotone / antitone essential
/// dependence, 0 for mixed.
SignedDigraph signed_interaction_graph(const BooleanNetwork& f);

/// Throws InessentialInputError unless every declared input of every
/// component is essential (so the declared graph is the interaction graph).
void require_essential_inputs(const BooleanNetwork& f);

bool is_component_monotone(const BooleanNetwork& f, int v);
bool is_monotone(const BooleanNetwork& f);

/// Per-vertex and-or classification. The empty conjunction is 1 and the
/// empty disjunction is 0, so a constant-1 source is an and-vertex and a
/// constant-0 source an or-vertex. A single-input identity matches both
/// forms and is reported as AndGate.
enum class GateKind { AndGate, OrGate, Neither };
std::vector<GateKind> classify_and_or(const BooleanNetwork& f);
bool is_and_or_network(const BooleanNetwork& f);

// --- JSON format --------------------------------------------------------
//
// {"n": 3, "vertices": [{"inputs": [0, 2], "table": "0111"}, ...]}
// Table strings list entries by valuation index, first input = LSB.

BooleanNetwork read_network_json(std::istream& in);
BooleanNetwork parse_network_json(const std::string& text);
void write_network_json(std::ostream& out, const BooleanNetwork& f);
std::string format_network_json(const BooleanNetwork& f);

} // namespace fixnet
