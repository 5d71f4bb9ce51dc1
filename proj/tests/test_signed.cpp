#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include "fixnet/families.hpp"
#include "fixnet/poset.hpp"
#include "fixnet/signed_digraph.hpp"

#include <sstream>

using namespace fixnet;
using namespace testutil;

namespace {

SignedDigraph random_signed(std::mt19937& rng, int n, double p, bool allow_zero = true) {
    auto g = random_digraph(rng, n, p);
    std::vector<int> signs;
    for (std::size_t i = 0; i < g.arcs().size(); ++i) {
        int s = allow_zero ? static_cast<int>(rng() % 3) - 1 : (rng() % 2 ? 1 : -1);
        signs.push_back(s);
    }
    return SignedDigraph(g, signs);
}

// Undirected simple cycles of the underlying multigraph (each arc is one
// edge, usable once, in either direction); used to cross-check balance.
bool all_undirected_cycles_positive(const SignedDigraph& sd) {
    const auto& arcs = sd.base().arcs();
    int m = static_cast<int>(arcs.size());
    // Loop edges are 1-cycles.
    for (int i = 0; i < m; ++i)
        if (arcs[i].first == arcs[i].second && sd.signs()[i] != 1) return false;
    // DFS over edge sequences with distinct vertices.
    std::function<bool(int, int, unsigned, int, int)> walk =
        [&](int start, int current, unsigned used_edges, int sign, int depth) -> bool {
        for (int i = 0; i < m; ++i) {
            if (used_edges & (1u << i)) continue;
            auto [a, b] = arcs[i];
            if (a == b) continue;
            int next = -1;
            if (a == current) next = b;
            else if (b == current) next = a;
            else continue;
            int s = sign * sd.signs()[i];
            if (next == start) {
                if (depth >= 1 && s != 1) return true; // negative closed walk
            } else {
                // Vertex-disjointness: track visited via used vertices in the
                // path; encode through recursion arguments.
                // (Handled by caller's visited mask below.)
            }
            (void)s;
        }
        return false;
    };
    (void)walk;
    // Simpler exact approach for tiny graphs: enumerate vertex subsets and
    // cyclic orders.
    int n = sd.vertex_count();
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    std::vector<int> perm;
    std::function<bool(std::vector<int>&, unsigned)> choose = [&](std::vector<int>& chosen,
                                                                  unsigned mask) -> bool {
        if (chosen.size() >= 2) {
            // Try all cyclic orders with chosen[0] fixed first.
            std::vector<int> rest(chosen.begin() + 1, chosen.end());
            std::sort(rest.begin(), rest.end());
            do {
                std::vector<int> cyc{chosen[0]};
                cyc.insert(cyc.end(), rest.begin(), rest.end());
                // For each consecutive pair pick an arc direction (and arc).
                int L = static_cast<int>(cyc.size());
                // Collect candidate edge sets: for simplicity just check all
                // products of available parallel arcs.
                std::vector<std::vector<int>> options(L);
                bool possible = true;
                for (int e = 0; e < L && possible; ++e) {
                    int u = cyc[e], v = cyc[(e + 1) % L];
                    for (int i = 0; i < m; ++i)
                        if ((arcs[i] == Arc{u, v}) || (arcs[i] == Arc{v, u})) options[e].push_back(i);
                    if (options[e].empty()) possible = false;
                }
                if (!possible) continue;
                std::function<bool(int, int, unsigned)> pick = [&](int e, int sign,
                                                                   unsigned used) -> bool {
                    if (e == L) return sign != 1;
                    for (int i : options[e]) {
                        if (used & (1u << i)) continue;
                        if (pick(e + 1, sign * sd.signs()[i], used | (1u << i))) return true;
                    }
                    return false;
                };
                if (pick(0, 1, 0)) return true; // found a non-positive cycle
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
        for (int v = chosen.empty() ? 0 : chosen.back() + 1; v < n; ++v) {
            chosen.push_back(v);
            if (choose(chosen, mask)) return true;
            chosen.pop_back();
        }
        return false;
    };
    std::vector<int> chosen;
    return !choose(chosen, 0);
}

} // namespace

TEST_CASE("signed digraph basics and text format") {
    auto sd = parse_signed_digraph("3\n0 1 1\n1 2 -1\n2 0 0\n");
    CHECK(sd.sign(0, 1) == 1);
    CHECK(sd.sign(1, 2) == -1);
    CHECK(sd.sign(2, 0) == 0);
    std::ostringstream out;
    write_signed_digraph(out, sd);
    CHECK(parse_signed_digraph(out.str()) == sd);
    CHECK_THROWS_AS(SignedDigraph(Digraph(2, {{0, 1}}), {2}), InvalidInputError);
}

TEST_CASE("cycle signs") {
    auto k3neg = uniformly_signed(build_family("complete", 3), -1);
    for (const auto& c : enumerate_cycles(k3neg.base())) {
        if (c.length() == 2) CHECK(cycle_sign(k3neg, c) == 1);
        if (c.length() == 3) CHECK(cycle_sign(k3neg, c) == -1);
    }
}

TEST_CASE("balance") {
    SUBCASE("all-positive graphs are balanced") {
        auto& rng = test_rng(61001);
        for (int i = 0; i < 10; ++i) CHECK(is_balanced(uniformly_signed(random_digraph(rng, 5, 0.3), 1)));
    }
    SUBCASE("negative 2-cycle alone is balanced by switching one endpoint") {
        SignedDigraph k2(Digraph(2, {{0, 1}, {1, 0}}), {-1, -1});
        CHECK(is_balanced(k2));
        CHECK(cycle_sign(k2, Cycle(std::vector<int>{0, 1})) == 1);
    }
    SUBCASE("all-negative symmetric triangle is unbalanced") {
        CHECK_FALSE(is_balanced(uniformly_signed(build_family("complete", 3), -1)));
    }
    SUBCASE("zero arcs rule balance out") {
        CHECK_FALSE(is_balanced(parse_signed_digraph("2\n0 1 0\n")));
    }
    SUBCASE("switch characterization agrees with undirected-cycle enumeration") {
        auto& rng = test_rng(61002);
        for (int trial = 0; trial < 40; ++trial) {
            auto sd = random_signed(rng, 4, 0.4, false);
            CHECK(is_balanced(sd) == all_undirected_cycles_positive(sd));
        }
    }
}

TEST_CASE("switching") {
    auto& rng = test_rng(61003);
    SUBCASE("empty and full sets are the identity") {
        auto sd = random_signed(rng, 5, 0.4);
        CHECK(switch_signs(sd, {}) == sd);
        CHECK(switch_signs(sd, {0, 1, 2, 3, 4}) == sd);
    }
    SUBCASE("bipartite all-negative switches to all-positive") {
        auto knn = uniformly_signed(build_family("complete-bipartite", 2), -1);
        auto switched = switch_signs(knn, {0, 1}); // one part
        for (int s : switched.signs()) CHECK(s == 1);
    }
    SUBCASE("involution and cycle-sign invariance") {
        for (int trial = 0; trial < 20; ++trial) {
            auto sd = random_signed(rng, 6, 0.3);
            std::vector<int> I;
            for (int v = 0; v < 6; ++v)
                if (rng() & 1u) I.push_back(v);
            auto once = switch_signs(sd, I);
            CHECK(switch_signs(once, I) == sd);
            for (const auto& c : enumerate_cycles(sd.base()))
                CHECK(cycle_sign(sd, c) == cycle_sign(once, c));
        }
    }
}

TEST_CASE("switched networks") {
    auto& rng = test_rng(61004);
    SUBCASE("empty switch is the identity") {
        auto g = random_digraph(rng, 4, 0.5);
        auto f = random_network(rng, g);
        CHECK(switch_network(f, {}) == f);
    }
    SUBCASE("fixed point count invariant, signs switch accordingly") {
        for (int trial = 0; trial < 25; ++trial) {
            auto g = random_digraph(rng, 5, 0.4);
            auto f = random_network(rng, g);
            std::vector<int> I;
            for (int v = 0; v < 5; ++v)
                if (rng() & 1u) I.push_back(v);
            auto fI = switch_network(f, I);
            CHECK(count_fixed_points(fI) == count_fixed_points(f));
            // Bijection x -> x + e_I between the fixed point sets.
            State mask = 0;
            for (int v : I) mask |= State{1} << v;
            auto fixed = fixed_points(f);
            for (State x : fixed.states()) CHECK(fI.evaluate(x ^ mask) == (x ^ mask));
            CHECK(signed_interaction_graph(fI) == switch_signs(signed_interaction_graph(f), I));
        }
    }
    SUBCASE("full-set switch flips twice and keeps monotone networks monotone") {
        std::vector<NodeFunction> nodes(2);
        nodes[0].inputs = {0, 1};
        nodes[0].table = {0, 0, 0, 1};
        nodes[1].inputs = {0};
        nodes[1].table = {0, 1};
        BooleanNetwork f(2, std::move(nodes));
        auto flipped = switch_network(f, {0, 1});
        CHECK(is_monotone(flipped));
        auto sd = signed_interaction_graph(flipped);
        for (int s : sd.signs()) CHECK(s == 1);
    }
}

TEST_CASE("frustration index") {
    SUBCASE("balanced means zero") {
        auto knn = uniformly_signed(build_family("complete-bipartite", 2), -1);
        CHECK(frustration_index(knn) == 0);
    }
    SUBCASE("all-negative symmetric triangle keeps one negative edge pair") {
        // Exhaustive over the 8 switch sets: the best switch leaves exactly
        // one undirected edge negative, i.e. two arcs.
        CHECK(frustration_index(uniformly_signed(build_family("complete", 3), -1)) == 2);
    }
    SUBCASE("a zero arc survives every switch") {
        CHECK(frustration_index(parse_signed_digraph("3\n0 1 0\n1 2 1\n2 0 1\n")) == 1);
    }
    SUBCASE("exhaustive cross-check") {
        auto& rng = test_rng(61005);
        for (int trial = 0; trial < 20; ++trial) {
            auto sd = random_signed(rng, 5, 0.4);
            int direct = sd.vertex_count() * sd.vertex_count();
            for (unsigned mask = 0; mask < 32; ++mask) {
                std::vector<int> I;
                for (int v = 0; v < 5; ++v)
                    if ((mask >> v) & 1u) I.push_back(v);
                auto switched = switch_signs(sd, I);
                int nonpos = 0;
                for (int s : switched.signs())
                    if (s != 1) ++nonpos;
                direct = std::min(direct, nonpos);
            }
            CHECK(frustration_index(sd) == direct);
        }
    }
}

TEST_CASE("positive-cycle parameters") {
    SUBCASE("all-negative complete digraphs") {
        for (int n = 3; n <= 5; ++n) {
            auto sd = uniformly_signed(build_family("complete", n), -1);
            CHECK(tau_plus(sd) == n - 1);
            CHECK(nu_plus(sd) == n / 2);
        }
    }
    SUBCASE("all-positive graphs reduce to tau and nu") {
        auto& rng = test_rng(61006);
        for (int trial = 0; trial < 15; ++trial) {
            auto g = random_digraph(rng, 5, 0.35);
            auto sd = uniformly_signed(g, 1);
            CHECK(tau_plus(sd) == min_feedback_vertex_set(g).size);
            CHECK(nu_plus(sd) == max_cycle_packing(g).size);
        }
    }
    SUBCASE("all-negative odd cycle has no non-negative cycle") {
        auto sd = uniformly_signed(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}), -1);
        CHECK(tau_plus(sd) == 0);
        CHECK(nu_plus(sd) == 0);
    }
    SUBCASE("invariance under switching") {
        auto& rng = test_rng(61007);
        for (int trial = 0; trial < 15; ++trial) {
            auto sd = random_signed(rng, 5, 0.35);
            std::vector<int> I;
            for (int v = 0; v < 5; ++v)
                if (rng() & 1u) I.push_back(v);
            auto switched = switch_signs(sd, I);
            CHECK(tau_plus(sd) == tau_plus(switched));
            CHECK(nu_plus(sd) == nu_plus(switched));
        }
    }
    SUBCASE("exhaustive cross-check of both parameters") {
        auto& rng = test_rng(61011);
        for (int trial = 0; trial < 15; ++trial) {
            auto sd = random_signed(rng, 5, 0.35);
            std::vector<Cycle> nonneg;
            for (const auto& c : enumerate_cycles(sd.base()))
                if (cycle_sign(sd, c) >= 0) nonneg.push_back(c);
            // tau+ by direct subset enumeration.
            int n = sd.vertex_count();
            int tp_direct = n;
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                bool hits_all = true;
                for (const auto& c : nonneg)
                    if (!(c.vertex_mask() & mask)) {
                        hits_all = false;
                        break;
                    }
                if (hits_all) tp_direct = std::min(tp_direct, std::popcount(mask));
            }
            CHECK(tau_plus(sd) == tp_direct);
            // nu+ by direct subset enumeration over the cycle list.
            int m = static_cast<int>(nonneg.size());
            int np_direct = 0;
            if (m <= 18) {
                for (unsigned mask = 0; mask < (1u << m); ++mask) {
                    std::uint64_t used = 0;
                    bool disjoint = true;
                    int count = 0;
                    for (int i = 0; i < m && disjoint; ++i) {
                        if (!((mask >> i) & 1u)) continue;
                        if (nonneg[i].vertex_mask() & used) disjoint = false;
                        used |= nonneg[i].vertex_mask();
                        ++count;
                    }
                    if (disjoint) np_direct = std::max(np_direct, count);
                }
                CHECK(nu_plus(sd) == np_direct);
            }
        }
    }
}

TEST_CASE("monotone feedback vertex sets") {
    SUBCASE("all-negative bipartite needs every vertex, switching halves it") {
        for (int n = 2; n <= 3; ++n) {
            auto knn = uniformly_signed(build_family("complete-bipartite", n), -1);
            CHECK(tau_m(knn) == 2 * n);
            CHECK(tau_m_star(knn) == n);
            CHECK(min_feedback_vertex_set(knn.base()).size == n);
        }
    }
    SUBCASE("all-negative complete graphs") {
        for (int n = 3; n <= 4; ++n) {
            auto kn = uniformly_signed(build_family("complete", n), -1);
            CHECK(tau_m(kn) == n);
            CHECK(tau_m_star(kn) == n - 1);
            CHECK(tau_plus(kn) == n - 1);
        }
    }
    SUBCASE("all-positive graphs collapse to tau") {
        auto& rng = test_rng(61008);
        for (int trial = 0; trial < 10; ++trial) {
            auto g = random_digraph(rng, 5, 0.35);
            auto sd = uniformly_signed(g, 1);
            int tau = min_feedback_vertex_set(g).size;
            CHECK(tau_m(sd) == tau);
            CHECK(tau_m_star(sd) == tau);
        }
    }
    SUBCASE("parameter chain on random signed digraphs") {
        auto& rng = test_rng(61009);
        for (int trial = 0; trial < 20; ++trial) {
            auto sd = random_signed(rng, 5, 0.35);
            int tau = min_feedback_vertex_set(sd.base()).size;
            int tp = tau_plus(sd), np = nu_plus(sd);
            int tm = tau_m(sd), tms = tau_m_star(sd);
            int lambda = frustration_index(sd);
            CHECK(np <= tp);
            CHECK(tp <= tau);
            CHECK(tau <= tms);
            CHECK(tms <= tm);
            CHECK(tms <= tau + lambda);
        }
    }
}

TEST_CASE("signed upper bound") {
    auto k3 = uniformly_signed(build_family("complete", 3), -1);
    CHECK(signed_upper_bound(k3) == 3);
    auto k4 = uniformly_signed(build_family("complete", 4), -1);
    CHECK(signed_upper_bound(k4) == 7);
    SUBCASE("all-positive matches the monotone composite") {
        auto& rng = test_rng(61010);
        for (int trial = 0; trial < 10; ++trial) {
            auto g = random_digraph(rng, 5, 0.3);
            auto sd = uniformly_signed(g, 1);
            int tau = min_feedback_vertex_set(g).size;
            int nu = max_cycle_packing(g).size;
            long long expected =
                std::min(1ll << tau, sum_largest_binomials(tau, std::min(nu + 1, tau + 1)));
            CHECK(signed_upper_bound(sd) == expected);
        }
    }
}
