#pragma once

#include "fixnet/common.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fixnet {

using Arc = std::pair<int, int>;

/// Immutable digraph on vertices 0..n-1. Loops are allowed, duplicate arcs
/// are not. Arc order is canonical (sorted), so equal graphs compare equal
/// and the text format round-trips byte for byte.
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, std::vector<Arc> arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    bool has_arc(int u, int v) const;
    std::span<const int> out_neighbors(int v) const;
    std::span<const int> in_neighbors(int v) const;
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int max_in_degree() const;

    /// Vertices with empty in-neighborhood.
    std::vector<int> sources() const;

    bool is_acyclic() const;

    /// Subgraph induced by keeping exactly the vertices with keep[v] true.
    /// Vertex ids are preserved (the result has the same vertex count).
    Digraph restricted(const std::vector<char>& keep) const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// Strongly connected components, listed in topological order of the
/// condensation (no arc from a later component to an earlier one).
/// Vertices inside a component are sorted.
std::vector<std::vector<int>> strongly_connected_components(const Digraph& g);

/// Minimum dominating set: every vertex outside the set has an in-neighbor
/// inside it. Exhaustive by increasing size; the witness is the
/// lexicographically smallest minimum set.
struct DominatingSetResult {
    int size = 0;
    std::vector<int> vertices;
};
DominatingSetResult min_dominating_set(const Digraph& g, const Limits& lim = default_limits());

// --- text format ------------------------------------------------------
//
// First line: vertex count. One arc per line: "u v". Lines starting with
// '#' are comments. write_digraph emits arcs sorted, so read/write is stable.

Digraph read_digraph(std::istream& in);
Digraph parse_digraph(const std::string& text);
void write_digraph(std::ostream& out, const Digraph& g);
std::string format_digraph(const Digraph& g);

} // namespace fixnet
