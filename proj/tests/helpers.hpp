#pragma once

// Shared fixtures and independent brute-force oracles for the test suites.
// The oracles here deliberately avoid the library's search code paths.

#include "fixnet/boolean_network.hpp"
#include "fixnet/cycles.hpp"
#include "fixnet/digraph.hpp"
#include "fixnet/poset.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace testutil {

using namespace fixnet;

// Eight-vertex benchmark digraph used across the suites: a source feeding
// two tangled cycles plus a looped triangle. Vertices 0..7.
inline Digraph tangled_cycles() {
    return Digraph(8, {{0, 4}, {0, 6}, {0, 7},
                       {1, 1}, {1, 2}, {2, 3}, {3, 1}, {3, 4},
                       {4, 5}, {5, 4}, {5, 6},
                       {6, 5}, {6, 6}, {6, 7},
                       {7, 1}});
}

// All simple directed cycles by plain DFS over every start vertex, for
// cross-checking the enumeration. Intended for small graphs only.
inline std::vector<std::vector<int>> brute_force_cycles(const Digraph& g) {
    std::set<std::vector<int>> found;
    int n = g.vertex_count();
    std::vector<int> path;
    std::vector<char> on_path(n, 0);
    std::function<void(int, int)> dfs = [&](int start, int v) {
        for (int w : g.out_neighbors(v)) {
            if (w == start) {
                found.insert(path);
            } else if (w > start && !on_path[w]) {
                path.push_back(w);
                on_path[w] = 1;
                dfs(start, w);
                on_path[w] = 0;
                path.pop_back();
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[s] = 1;
        dfs(s, s);
    }
    return {found.begin(), found.end()};
}

// Reachability closure (Floyd-Warshall style) for SCC cross-checks.
inline std::vector<std::vector<char>> transitive_closure(const Digraph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (auto [u, v] : g.arcs()) reach[u][v] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (reach[i][k])
                for (int j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = 1;
    return reach;
}

inline bool subset_is_acyclic(const Digraph& g, unsigned removed_mask) {
    std::vector<char> keep(g.vertex_count(), 1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((removed_mask >> v) & 1u) keep[v] = 0;
    return g.restricted(keep).is_acyclic();
}

// Exhaustive minimum feedback vertex set, sizes ascending.
inline int brute_force_tau(const Digraph& g) {
    int n = g.vertex_count();
    for (int size = 0; size <= n; ++size)
        for (unsigned mask = 0; mask < (1u << n); ++mask)
            if (std::popcount(mask) == size && subset_is_acyclic(g, mask)) return size;
    return n;
}

inline std::mt19937& test_rng(std::uint32_t seed) {
    static std::mt19937 rng;
    rng.seed(seed);
    return rng;
}

inline Digraph random_digraph(std::mt19937& rng, int n, double arc_prob, bool allow_loops = true) {
    std::bernoulli_distribution coin(arc_prob);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v && !allow_loops) continue;
            if (coin(rng)) arcs.emplace_back(u, v);
        }
    return Digraph(n, std::move(arcs));
}

inline Digraph random_symmetric_loopless(std::mt19937& rng, int n, double edge_prob) {
    std::bernoulli_distribution coin(edge_prob);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) {
                arcs.emplace_back(u, v);
                arcs.emplace_back(v, u);
            }
    return Digraph(n, std::move(arcs));
}

// Random digraph with bounded in-degree (for oracle-sized sweeps).
inline Digraph random_digraph_bounded_indegree(std::mt19937& rng, int n, int max_in_degree,
                                               double density = 0.5) {
    std::vector<Arc> arcs;
    std::uniform_int_distribution<int> degree_dist(0, max_in_degree);
    for (int v = 0; v < n; ++v) {
        int d = std::min(n, degree_dist(rng));
        std::vector<int> candidates(n);
        std::iota(candidates.begin(), candidates.end(), 0);
        std::shuffle(candidates.begin(), candidates.end(), rng);
        std::bernoulli_distribution keep(density);
        int taken = 0;
        for (int u : candidates) {
            if (taken == d) break;
            arcs.emplace_back(u, v);
            ++taken;
        }
    }
    return Digraph(n, std::move(arcs));
}

// Random network with the given digraph as declared graph and uniformly
// random truth tables.
inline BooleanNetwork random_network(std::mt19937& rng, const Digraph& g) {
    std::vector<NodeFunction> nodes(g.vertex_count());
    std::bernoulli_distribution bit(0.5);
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto in = g.in_neighbors(v);
        nodes[v].inputs.assign(in.begin(), in.end());
        nodes[v].table.resize(std::size_t{1} << in.size());
        for (auto& b : nodes[v].table) b = bit(rng);
    }
    return BooleanNetwork(g.vertex_count(), std::move(nodes));
}

// Independent principal-path oracle: enumerate all simple paths (closed at
// the target allowed) by DFS and filter by the definition.
inline bool brute_force_principal_path(const Digraph& g, const Packing& p,
                                       const std::vector<int>& starts, int target) {
    int n = g.vertex_count();
    std::vector<char> in_packing(n, 0);
    for (const auto& c : p.cycles())
        for (int v : c.vertices()) in_packing[v] = 1;
    std::function<bool(int, std::vector<int>&)> dfs = [&](int v, std::vector<int>& path) -> bool {
        for (int w : g.out_neighbors(v)) {
            if (p.has_arc(v, w)) continue;
            if (w == target) return true;
            if (in_packing[w]) continue;
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            path.push_back(w);
            if (dfs(w, path)) return true;
            path.pop_back();
        }
        return false;
    };
    for (int s : starts) {
        std::vector<int> path{s};
        if (dfs(s, path)) return true;
    }
    return false;
}

} // namespace testutil
