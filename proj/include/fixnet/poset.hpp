#pragma once

#include "fixnet/boolean_network.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace fixnet {

/// Finite subset of {0,1}^n viewed as a poset under the componentwise
/// order. States are kept sorted and distinct.
class PointSet {
public:
    PointSet() = default;
    PointSet(int dimension, std::vector<State> states);

    int dimension() const { return n_; }
    int size() const { return static_cast<int>(states_.size()); }
    const std::vector<State>& states() const { return states_; }
    bool contains(State x) const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    int n_ = 0;
    std::vector<State> states_;
};

inline bool state_leq(State x, State y) { return (x & ~y) == 0; }

/// Restriction of every point to the coordinates in I (ascending), checked
/// to be injective; when monotone_outside is set, f_v is verified monotone
/// for v outside I and the projection is verified order-isomorphic.
PointSet project_onto(const PointSet& points, const std::vector<int>& I, const BooleanNetwork& f,
                      bool monotone_outside);

struct ChainResult {
    int length = 0;            // number of elements
    std::vector<State> chain;  // ascending witness
};
ChainResult longest_chain(const PointSet& points);

struct AntichainResult {
    int size = 0;
    std::vector<State> antichain;
};
AntichainResult max_antichain(const PointSet& points);

/// k-pattern: sequences (x^1..x^k), (y^1..y^k) of distinct points with
/// x^p <= y^q exactly when p != q. Special: y^p is the complement of x^p.
struct Pattern {
    std::vector<State> xs;
    std::vector<State> ys;
    bool special = false;
};

struct PatternResult {
    int size = 0;
    Pattern witness;
};

PatternResult max_pattern(const PointSet& points, bool special);
bool has_pattern_of_size(const PointSet& points, int k, bool special);

/// Every pair must have a least upper bound and a greatest lower bound
/// inside the set.
bool is_lattice(const PointSet& points);

/// Sum of the l largest binomial coefficients C(n, k), center outwards.
long long sum_largest_binomials(int n, int l);

/// min(2^tau, 2 + sum of the nu-1 largest C(tau, .), and 2^{tau-1}+1 when
/// nu* = 1). Requires nu* <= nu <= tau.
long long monotone_upper_bound(int tau, int nu, int nu_star);

// --- text format: one bitstring per line, vertex 0 leftmost --------------

PointSet read_point_set(std::istream& in);
void write_point_set(std::ostream& out, const PointSet& points);

} // namespace fixnet
