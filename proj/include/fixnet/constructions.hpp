#pragma once

#include "fixnet/boolean_network.hpp"
#include "fixnet/cycles.hpp"

#include <optional>
#include <string>

namespace fixnet {

/// A built network together with its guaranteed fixed-point count. The
/// builders self-verify (monotone, interaction graph equal to the input,
/// witness states fixed); the exact count is enumerated when the digraph is
/// within the verification cap, otherwise `verified` is false.
struct BuiltNetwork {
    BooleanNetwork net;
    long long guaranteed_fixed_points = 0;
    bool verified = false;
    std::optional<long long> exact_fixed_points;
};

/// Threshold network over a maximum cycle packing: nu+1 fixed points on the
/// chain of reachability prefixes.
BuiltNetwork threshold_network(const Digraph& g, const Limits& lim = default_limits());

/// Network whose packing cycles act independently: 2^|p| fixed points,
/// one per cycle subset. Requires a special packing; sources are forced to
/// constant 0.
BuiltNetwork special_packing_network(const Digraph& g, const Packing& p,
                                     const Limits& lim = default_limits());

/// Short-cycle bound: selects I with |I| >= k/3^l from the given disjoint
/// cycles, cuts the arcs into the discarded cycles, applies the
/// special-packing construction and restores the cut arcs as conjunctions.
BuiltNetwork short_cycle_network(const Digraph& g, const std::vector<Cycle>& cycles,
                                 const Limits& lim = default_limits());

/// The looped-transitive-tournament network: f_{n-1} = x_{n-1},
/// f_v = x_v or (x_{v+1} and ... and x_{n-1}); exactly 2^{n-1}+1 fixed points.
BuiltNetwork transitive_tournament_network(int n, const Limits& lim = default_limits());

struct LowerBoundReport {
    int nu = 0;
    int nu_star = 0;
    int circumference = 0;
    long long from_packing = 0;      // nu + 1
    long long from_special = 0;      // 2^nu*
    long long from_short_cycles = 0; // 2^floor(nu / 3^c)
    long long best = 0;
    std::string best_construction;
};

/// Best of the three constructive lower bounds, from exact parameters.
LowerBoundReport lower_bound_report(const Digraph& g, const Limits& lim = default_limits());

} // namespace fixnet
