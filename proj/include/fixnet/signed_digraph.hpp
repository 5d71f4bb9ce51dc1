#pragma once

#include "fixnet/cycles.hpp"

#include <iosfwd>
#include <vector>

namespace fixnet {

class BooleanNetwork;

/// Digraph with arc labels in {-1, 0, +1}, stored aligned with the base
/// graph's canonical arc order.
class SignedDigraph {
public:
    SignedDigraph() = default;
    SignedDigraph(Digraph base, std::vector<int> signs);

    const Digraph& base() const { return base_; }
    int vertex_count() const { return base_.vertex_count(); }
    int sign(int u, int v) const;
    const std::vector<int>& signs() const { return signs_; }

    friend bool operator==(const SignedDigraph&, const SignedDigraph&) = default;

private:
    Digraph base_;
    std::vector<int> signs_;
};

/// Every arc gets the same sign.
SignedDigraph uniformly_signed(const Digraph& g, int sign);

/// Product of the arc signs along the cycle; any 0 arc makes it 0.
int cycle_sign(const SignedDigraph& sd, const Cycle& c);

/// Balance via the switch characterization: some switch turns every arc
/// positive. Any 0-labeled arc rules balance out.
bool is_balanced(const SignedDigraph& sd);

/// Negate the signs of arcs with exactly one endpoint in I.
SignedDigraph switch_signs(const SignedDigraph& sd, const std::vector<int>& I);

/// Conjugate network x -> f(x + e_I) + e_I; same number of fixed points,
/// signed interaction graph switched by I.
BooleanNetwork switch_network(const BooleanNetwork& f, const std::vector<int>& I);

/// Frustration index: minimum number of non-positive arcs over all
/// switches (0-labeled arcs survive every switch).
int frustration_index(const SignedDigraph& sd, const Limits& lim = default_limits());

/// Minimum vertex set meeting every non-negative cycle (sign >= 0).
int tau_plus(const SignedDigraph& sd, const Limits& lim = default_limits());

/// Maximum number of vertex-disjoint non-negative cycles.
int nu_plus(const SignedDigraph& sd, const Limits& lim = default_limits());

/// Minimum feedback vertex set containing the head of every non-positive
/// arc.
int tau_m(const SignedDigraph& sd, const Limits& lim = default_limits());

/// Minimum of tau_m over all switches.
int tau_m_star(const SignedDigraph& sd, const Limits& lim = default_limits());

/// min(2^tau+, sum of the nu+ + 1 largest binomial coefficients
/// C(tau_m*, k)).
long long signed_upper_bound(const SignedDigraph& sd, const Limits& lim = default_limits());

// --- text format: header line n, then "u v s" with s in {-1, 0, 1} --------

SignedDigraph read_signed_digraph(std::istream& in);
SignedDigraph parse_signed_digraph(const std::string& text);
void write_signed_digraph(std::ostream& out, const SignedDigraph& sd);

} // namespace fixnet
