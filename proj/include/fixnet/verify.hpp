#pragma once

#include "fixnet/oracle.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fixnet {

struct CheckLine {
    enum class Status { Pass, Fail, Skip };
    std::string id;
    std::string description;
    std::string lhs;
    std::string rhs;
    Status status = Status::Skip;
    std::string note;
};

struct VerifyReport {
    std::vector<CheckLine> lines;
    bool all_passed() const;
    nlohmann::json to_json() const;
};

struct VerifyOptions {
    Limits limits{};
    std::uint32_t seed = 1;
    int random_monotone_samples = 50;
    bool run_oracle = true; // disable to get structural checks only
};

/// Runs every applicable bound and structural check against the exact
/// oracle value. Infeasible sub-checks are reported as skipped, not failed.
VerifyReport verify_theorems(const Digraph& g, const VerifyOptions& opts = {});
VerifyReport verify_theorems(const SignedDigraph& sd, const VerifyOptions& opts = {});

} // namespace fixnet
