#include "fixnet/constructions.hpp"

#include "fixnet/poset.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

namespace fixnet {

namespace {

// Shared self-checks: monotone, interaction graph equal to the target, and
// every witness state actually fixed. Exact count only within the cap.
BuiltNetwork finalize(const Digraph& g, BooleanNetwork net, long long guaranteed,
                      const std::vector<State>& witnesses, const Limits& lim) {
    if (!is_monotone(net)) throw PostconditionError("construction: network is not monotone");
    if (interaction_graph(net) != g)
        throw PostconditionError("construction: interaction graph differs from the input digraph");
    for (State x : witnesses)
        if (net.evaluate(x) != x)
            throw PostconditionError("construction: witness state is not fixed");
    {
        std::vector<State> dedup = witnesses;
        std::sort(dedup.begin(), dedup.end());
        dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
        if (static_cast<long long>(dedup.size()) < guaranteed)
            throw PostconditionError("construction: fewer distinct witnesses than guaranteed");
    }
    BuiltNetwork result{std::move(net), guaranteed, false, std::nullopt};
    if (g.vertex_count() <= lim.construction_verify_vertices) {
        long long exact = count_fixed_points(result.net, lim);
        if (exact < guaranteed)
            throw PostconditionError("construction: enumeration found fewer fixed points than "
                                     "guaranteed");
        result.exact_fixed_points = exact;
        result.verified = true;
    }
    return result;
}

std::vector<int> reachable_from(const Digraph& g, const std::vector<int>& seeds,
                                const std::vector<char>& allowed) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::deque<int> queue;
    for (int v : seeds)
        if (allowed[v] && !seen[v]) {
            seen[v] = 1;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.out_neighbors(u))
            if (allowed[w] && !seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

} // namespace

BuiltNetwork threshold_network(const Digraph& g, const Limits& lim) {
    int n = g.vertex_count();
    if (n == 0) throw InvalidInputError("threshold_network: empty digraph");
    auto packing = max_cycle_packing(g, lim);
    int nu = packing.size;
    const auto& cycles = packing.packing.cycles();

    // Partition: U_0 = vertices unreachable from every packing cycle; U_p =
    // vertices reached from cycle p once earlier parts and later cycles are
    // removed. Cycle order is the packing's canonical order.
    std::vector<int> part(n, -1);
    {
        std::vector<char> all(n, 1);
        std::vector<int> seeds;
        for (const auto& c : cycles)
            for (int v : c.vertices()) seeds.push_back(v);
        for (int v : reachable_from(g, seeds, all)) part[v] = 0; // temporarily: reachable
        for (int v = 0; v < n; ++v) part[v] = part[v] == 0 ? -1 : 0;
    }
    for (int p = 1; p <= nu; ++p) {
        std::vector<char> allowed(n, 0);
        for (int v = 0; v < n; ++v)
            if (part[v] == -1) allowed[v] = 1;
        for (int q = p; q < nu; ++q) // exclude later cycles' vertices
            for (int v : cycles[q].vertices()) allowed[v] = 0;
        for (int v : cycles[p - 1].vertices()) allowed[v] = 1;
        for (int v : reachable_from(g, cycles[p - 1].vertices(), allowed)) part[v] = p;
    }

    for (int v = 0; v < n; ++v)
        if (part[v] < 0)
            throw PostconditionError("threshold_network: reachability stages missed a vertex");

    std::vector<int> theta(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.in_neighbors(v))
            if (part[u] <= part[v]) ++theta[v];

    std::vector<NodeFunction> nodes(n);
    for (int v = 0; v < n; ++v) {
        auto in = g.in_neighbors(v);
        nodes[v].inputs.assign(in.begin(), in.end());
        int d = static_cast<int>(in.size());
        nodes[v].table.resize(std::size_t{1} << d);
        for (std::size_t m = 0; m < nodes[v].table.size(); ++m)
            nodes[v].table[m] = static_cast<int>(std::popcount(m)) >= theta[v];
    }
    BooleanNetwork net(n, std::move(nodes));

    std::vector<State> witnesses;
    for (int q = 0; q <= nu; ++q) {
        State x = 0;
        for (int v = 0; v < n; ++v)
            if (part[v] <= q) x |= State{1} << v;
        witnesses.push_back(x);
    }
    return finalize(g, std::move(net), nu + 1, witnesses, lim);
}

BuiltNetwork special_packing_network(const Digraph& g, const Packing& p, const Limits& lim) {
    int n = g.vertex_count();
    if (!is_special_packing(g, p))
        throw InvalidInputError("special_packing_network: packing is not special");

    // v' = predecessor of v along its own packing cycle (the in-neighbor
    // through the packing arc).
    std::vector<int> packing_pred(n, -1);
    for (const auto& c : p.cycles()) {
        int l = c.length();
        for (int i = 0; i < l; ++i) {
            auto [u, v] = c.arc(i);
            packing_pred[v] = u;
        }
    }
    std::vector<char> is_source(n, 0);
    for (int v : g.sources()) is_source[v] = 1;

    std::vector<NodeFunction> nodes(n);
    for (int v = 0; v < n; ++v) {
        auto in = g.in_neighbors(v);
        nodes[v].inputs.assign(in.begin(), in.end());
        int d = static_cast<int>(in.size());
        nodes[v].table.resize(std::size_t{1} << d);
        if (is_source[v]) {
            nodes[v].table[0] = 0; // constant 0 (d == 0)
            continue;
        }
        int pred_bit = -1;
        if (packing_pred[v] != -1) {
            auto it = std::find(nodes[v].inputs.begin(), nodes[v].inputs.end(), packing_pred[v]);
            pred_bit = static_cast<int>(it - nodes[v].inputs.begin());
        }
        for (std::size_t m = 0; m < nodes[v].table.size(); ++m) {
            bool others_all_one = true;
            for (int j = 0; j < d; ++j)
                if (j != pred_bit && !((m >> j) & 1)) {
                    others_all_one = false;
                    break;
                }
            bool value;
            if (pred_bit >= 0) {
                bool pred_on = (m >> pred_bit) & 1;
                // x_{v'} alone when the packing arc is the only input.
                value = d == 1 ? pred_on : (pred_on || others_all_one);
            } else {
                value = others_all_one; // pure conjunction
            }
            nodes[v].table[m] = value;
        }
    }
    BooleanNetwork net(n, std::move(nodes));

    // One witness per cycle subset: the subset's vertices plus the maximal
    // absorbed-conjunction closure (sources never join it). The closure is a
    // monotone fixpoint, so the scan order cannot matter; asserted by
    // computing it in both directions.
    int k = p.size();
    if (k > 25) throw CapExceededError("special_packing_network: packing too large");
    auto closure = [&](std::vector<char> on, bool forward) {
        bool grew = true;
        while (grew) {
            grew = false;
            for (int step = 0; step < n; ++step) {
                int v = forward ? step : n - 1 - step;
                if (on[v] || is_source[v] || g.in_degree(v) == 0) continue;
                bool all_in = true;
                for (int u : g.in_neighbors(v))
                    if (!on[u]) {
                        all_in = false;
                        break;
                    }
                if (all_in) {
                    on[v] = 1;
                    grew = true;
                }
            }
        }
        return on;
    };
    std::vector<State> witnesses;
    for (std::uint32_t subset = 0; subset < (1u << k); ++subset) {
        std::vector<char> seed(n, 0);
        for (int i = 0; i < k; ++i)
            if ((subset >> i) & 1)
                for (int v : p.cycle(i).vertices()) seed[v] = 1;
        auto on = closure(seed, true);
        if (closure(seed, false) != on)
            throw PostconditionError("special_packing_network: closure depends on scan order");
        State x = 0;
        for (int v = 0; v < n; ++v)
            if (on[v]) x |= State{1} << v;
        witnesses.push_back(x);
    }
    return finalize(g, std::move(net), 1ll << k, witnesses, lim);
}

BuiltNetwork short_cycle_network(const Digraph& g, const std::vector<Cycle>& cycles,
                                 const Limits& lim) {
    if (cycles.empty()) throw InvalidInputError("short_cycle_network: no cycles given");
    std::vector<std::vector<int>> parts;
    for (const auto& c : cycles) {
        if (!c.valid_in(g)) throw InvalidInputError("short_cycle_network: not a cycle of the digraph");
        auto vs = c.vertices();
        std::sort(vs.begin(), vs.end());
        parts.push_back(std::move(vs));
    }
    auto I = dominating_selection(g, parts, parts);

    std::vector<char> in_selected(g.vertex_count(), 0);
    std::vector<char> in_any(g.vertex_count(), 0);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int v : parts[i]) in_any[v] = 1;
    for (int i : I)
        for (int v : parts[i]) in_selected[v] = 1;

    // W = discarded cycle vertices; delete every arc into W.
    std::vector<Arc> pruned;
    for (auto [u, v] : g.arcs())
        if (!(in_any[v] && !in_selected[v])) pruned.emplace_back(u, v);
    Digraph g_cut(g.vertex_count(), std::move(pruned));

    std::vector<Cycle> selected;
    for (int i : I) selected.push_back(cycles[i]);
    Packing selected_packing(g_cut, selected);
    if (!is_special_packing(g_cut, selected_packing))
        throw PostconditionError("short_cycle_network: selected cycles are not special in the cut "
                                 "digraph");

    BuiltNetwork inner = special_packing_network(g_cut, selected_packing, lim);

    // Restore the deleted arcs: discarded-cycle vertices become pure
    // conjunctions over their full in-neighborhoods.
    std::vector<NodeFunction> nodes;
    nodes.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!(in_any[v] && !in_selected[v])) {
            nodes.push_back(inner.net.node(v));
            continue;
        }
        NodeFunction node;
        auto in = g.in_neighbors(v);
        node.inputs.assign(in.begin(), in.end());
        node.table.resize(std::size_t{1} << in.size());
        node.table.back() = 1;
        nodes.push_back(std::move(node));
    }
    BooleanNetwork net(g.vertex_count(), std::move(nodes));

    // The inner witnesses keep W at zero, so they remain fixed.
    std::vector<State> witnesses;
    {
        int k = static_cast<int>(I.size());
        // Recompute the inner construction's witnesses by enumeration of
        // cycle subsets through the inner network's own check.
        for (std::uint32_t subset = 0; subset < (1u << k); ++subset) {
            std::vector<char> on(g.vertex_count(), 0);
            for (int i = 0; i < k; ++i)
                if ((subset >> i) & 1)
                    for (int v : selected_packing.cycle(i).vertices()) on[v] = 1;
            std::vector<char> src(g.vertex_count(), 0);
            for (int v : g_cut.sources()) src[v] = 1;
            bool grew = true;
            while (grew) {
                grew = false;
                for (int v = 0; v < g.vertex_count(); ++v) {
                    if (on[v] || src[v] || g_cut.in_degree(v) == 0) continue;
                    bool all_in = true;
                    for (int u : g_cut.in_neighbors(v))
                        if (!on[u]) {
                            all_in = false;
                            break;
                        }
                    if (all_in) {
                        on[v] = 1;
                        grew = true;
                    }
                }
            }
            State x = 0;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (on[v]) x |= State{1} << v;
            witnesses.push_back(x);
        }
    }
    return finalize(g, std::move(net), 1ll << I.size(), witnesses, lim);
}

BuiltNetwork transitive_tournament_network(int n, const Limits& lim) {
    if (n < 1) throw InvalidInputError("transitive_tournament_network: n must be at least 1");
    if (n > 25) throw CapExceededError("transitive_tournament_network: n too large");
    std::vector<NodeFunction> nodes(n);
    for (int v = 0; v < n; ++v) {
        // Inputs v, v+1, ..., n-1; bit 0 is x_v itself.
        for (int u = v; u < n; ++u) nodes[v].inputs.push_back(u);
        int d = n - v;
        nodes[v].table.resize(std::size_t{1} << d);
        for (std::size_t m = 0; m < nodes[v].table.size(); ++m) {
            bool self = m & 1;
            bool rest = (m >> 1) + 1 == (std::size_t{1} << (d - 1));
            nodes[v].table[m] = self || (d > 1 && rest);
        }
    }
    BooleanNetwork net(n, std::move(nodes));

    std::vector<State> witnesses;
    State top_bit = State{1} << (n - 1);
    for (State x = 0; x < top_bit; ++x) witnesses.push_back(x); // x_{n-1} = 0
    witnesses.push_back((State{1} << n) - 1);                   // all ones

    Digraph expected = [n] {
        std::vector<Arc> arcs;
        for (int v = 0; v < n; ++v) arcs.emplace_back(v, v);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < u; ++v) arcs.emplace_back(u, v);
        return Digraph(n, std::move(arcs));
    }();
    BuiltNetwork result = finalize(expected, std::move(net), (1ll << (n - 1)) + 1, witnesses, lim);
    if (result.exact_fixed_points && *result.exact_fixed_points != (1ll << (n - 1)) + 1)
        throw PostconditionError("transitive_tournament_network: unexpected fixed point count");
    return result;
}

LowerBoundReport lower_bound_report(const Digraph& g, const Limits& lim) {
    LowerBoundReport report;
    auto chordless = enumerate_chordless_cycles(g, lim);
    if (chordless.empty()) throw InvalidInputError("lower_bound_report: digraph is acyclic");
    report.nu = max_cycle_packing(g, lim).size;
    report.nu_star = max_special_packing(g, lim).size;
    report.circumference = 0;
    for (const auto& c : chordless) report.circumference = std::max(report.circumference, c.length());

    report.from_packing = report.nu + 1;
    report.from_special = 1ll << report.nu_star;
    long long power = 1;
    for (int i = 0; i < report.circumference; ++i) power *= 3;
    report.from_short_cycles = 1ll << (report.nu / power);

    report.best = report.from_packing;
    report.best_construction = "threshold";
    if (report.from_special > report.best) {
        report.best = report.from_special;
        report.best_construction = "special-packing";
    }
    if (report.from_short_cycles > report.best) {
        report.best = report.from_short_cycles;
        report.best_construction = "short-cycle";
    }
    return report;
}

} // namespace fixnet
