#pragma once

#include "fixnet/boolean_network.hpp"
#include "fixnet/signed_digraph.hpp"

#include <functional>
#include <vector>

namespace fixnet {

/// All monotone Boolean functions of d variables (d <= 5), as truth tables
/// in valuation order; optionally only those depending on every variable.
std::vector<std::vector<std::uint8_t>> enumerate_monotone_functions(int d,
                                                                    bool require_all_essential);

struct OracleOptions {
    Limits limits{};
    std::function<void(long long done, long long total)> progress; // optional
    long long progress_stride = 1 << 20;
    long long start_index = 0; // resume point in the deterministic order
};

struct OracleResult {
    long long value = 0;
    BooleanNetwork witness; // first maximizer in enumeration order
    long long candidates = 0;
};

/// Exact maximum fixed-point count over monotone networks whose interaction
/// graph equals g. Every vertex needs in-degree <= 5 and the candidate
/// product must fit the budget.
OracleResult phi_m_exact(const Digraph& g, const OracleOptions& opts = {});

/// Exact maximum over networks whose signed interaction graph equals sd.
OracleResult phi_exact(const SignedDigraph& sd, const OracleOptions& opts = {});

} // namespace fixnet
