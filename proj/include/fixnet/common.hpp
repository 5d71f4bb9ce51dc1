#pragma once

#include <stdexcept>
#include <string>

namespace fixnet {

/// Search caps for the exact solvers. Everything in this library is
/// exhaustive or branch-and-bound; the caps turn runaway inputs into
/// errors instead of silent truncation.
struct Limits {
    int max_enum_vertices = 24;          // 2^n state enumeration / FVS search
    int max_cycle_count = 5000;          // elementary-cycle enumeration
    int construction_verify_vertices = 20;  // self-verification of built networks
    int max_switch_vertices = 20;        // switch-set minimisation (tau_m*)
    long long oracle_budget = 100000000; // candidate networks per oracle call
    int oracle_max_in_degree = 5;
};

inline const Limits& default_limits() {
    static const Limits lim{};
    return lim;
}

struct CapExceededError : std::runtime_error {
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidInputError : std::invalid_argument {
    explicit InvalidInputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A network declares an input that is not essential, in a context that
/// requires the declared graph to equal the interaction graph.
struct InessentialInputError : std::runtime_error {
    explicit InessentialInputError(const std::string& what) : std::runtime_error(what) {}
};

/// A built object failed one of its own contract checks.
struct PostconditionError : std::logic_error {
    explicit PostconditionError(const std::string& what) : std::logic_error(what) {}
};

} // namespace fixnet
