#include "fixnet/signed_digraph.hpp"

#include "fixnet/boolean_network.hpp"
#include "fixnet/poset.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace fixnet {

SignedDigraph::SignedDigraph(Digraph base, std::vector<int> signs)
    : base_(std::move(base)), signs_(std::move(signs)) {
    if (signs_.size() != base_.arcs().size())
        throw InvalidInputError("signed digraph: one sign per arc required");
    for (int s : signs_)
        if (s < -1 || s > 1) throw InvalidInputError("signed digraph: signs must be -1, 0 or 1");
}

int SignedDigraph::sign(int u, int v) const {
    const auto& arcs = base_.arcs();
    auto it = std::lower_bound(arcs.begin(), arcs.end(), Arc{u, v});
    if (it == arcs.end() || *it != Arc{u, v})
        throw InvalidInputError("signed digraph: no such arc");
    return signs_[it - arcs.begin()];
}

SignedDigraph uniformly_signed(const Digraph& g, int sign) {
    return SignedDigraph(g, std::vector<int>(g.arcs().size(), sign));
}

int cycle_sign(const SignedDigraph& sd, const Cycle& c) {
    int product = 1;
    for (int i = 0; i < c.length(); ++i) {
        auto [u, v] = c.arc(i);
        product *= sd.sign(u, v);
    }
    return product;
}

bool is_balanced(const SignedDigraph& sd) {
    for (int s : sd.signs())
        if (s == 0) return false;
    // 2-color the underlying edges: positive arcs want equal colors,
    // negative arcs different; loops and antiparallel pairs included.
    int n = sd.vertex_count();
    std::vector<int> color(n, -1);
    const auto& arcs = sd.base().arcs();
    std::vector<std::vector<std::pair<int, int>>> adj(n); // (other, sign)
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        auto [u, v] = arcs[i];
        int s = sd.signs()[i];
        if (u == v) {
            if (s == -1) return false;
            continue;
        }
        adj[u].emplace_back(v, s);
        adj[v].emplace_back(u, s);
    }
    for (int start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (auto [v, s] : adj[u]) {
                int want = s == 1 ? color[u] : 1 - color[u];
                if (color[v] == -1) {
                    color[v] = want;
                    queue.push_back(v);
                } else if (color[v] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

SignedDigraph switch_signs(const SignedDigraph& sd, const std::vector<int>& I) {
    std::vector<char> in_set(sd.vertex_count(), 0);
    for (int v : I) {
        if (v < 0 || v >= sd.vertex_count()) throw InvalidInputError("switch: vertex out of range");
        in_set[v] = 1;
    }
    std::vector<int> signs = sd.signs();
    const auto& arcs = sd.base().arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i)
        if (in_set[arcs[i].first] != in_set[arcs[i].second]) signs[i] = -signs[i];
    return SignedDigraph(sd.base(), std::move(signs));
}

BooleanNetwork switch_network(const BooleanNetwork& f, const std::vector<int>& I) {
    std::vector<char> in_set(f.size(), 0);
    for (int v : I) {
        if (v < 0 || v >= f.size()) throw InvalidInputError("switch_network: vertex out of range");
        in_set[v] = 1;
    }
    std::vector<NodeFunction> nodes;
    nodes.reserve(f.size());
    for (int v = 0; v < f.size(); ++v) {
        const auto& node = f.node(v);
        std::size_t flip_mask = 0;
        for (std::size_t j = 0; j < node.inputs.size(); ++j)
            if (in_set[node.inputs[j]]) flip_mask |= std::size_t{1} << j;
        NodeFunction out;
        out.inputs = node.inputs;
        out.table.resize(node.table.size());
        for (std::size_t m = 0; m < node.table.size(); ++m)
            out.table[m] = static_cast<std::uint8_t>(node.table[m ^ flip_mask] ^ (in_set[v] ? 1 : 0));
        nodes.push_back(std::move(out));
    }
    return BooleanNetwork(f.size(), std::move(nodes));
}

int frustration_index(const SignedDigraph& sd, const Limits& lim) {
    int n = sd.vertex_count();
    if (n > lim.max_enum_vertices)
        throw CapExceededError("frustration_index: vertex count exceeds cap");
    const auto& arcs = sd.base().arcs();
    int m = static_cast<int>(arcs.size());
    // Gray-code walk over switch sets, flipping one vertex at a time.
    std::vector<int> cur = sd.signs();
    std::vector<std::vector<int>> incident(n); // non-loop arcs touching v
    for (int i = 0; i < m; ++i)
        if (arcs[i].first != arcs[i].second) {
            incident[arcs[i].first].push_back(i);
            incident[arcs[i].second].push_back(i);
        }
    int nonpos = 0;
    for (int s : cur)
        if (s != 1) ++nonpos;
    int best = nonpos;
    std::uint64_t total = n == 0 ? 1 : (std::uint64_t{1} << n);
    for (std::uint64_t code = 1; code < total; ++code) {
        int v = std::countr_zero(code);
        for (int i : incident[v]) {
            if (cur[i] != 1) --nonpos;
            cur[i] = -cur[i];
            if (cur[i] != 1) ++nonpos;
        }
        best = std::min(best, nonpos);
    }
    return best;
}

namespace {

std::vector<Cycle> non_negative_cycles(const SignedDigraph& sd, const Limits& lim) {
    std::vector<Cycle> result;
    for (auto& c : enumerate_cycles(sd.base(), lim))
        if (cycle_sign(sd, c) >= 0) result.push_back(std::move(c));
    return result;
}

// Minimum hitting set over an explicit cycle list, branch and bound on an
// uncovered cycle.
struct HittingSearch {
    const std::vector<Cycle>& cycles;
    std::vector<std::uint64_t> masks;
    int best;

    explicit HittingSearch(const std::vector<Cycle>& cs, int n) : cycles(cs), best(n) {
        masks.reserve(cs.size());
        for (const auto& c : cs) masks.push_back(c.vertex_mask());
        std::sort(masks.begin(), masks.end(),
                  [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
    }

    void branch(std::uint64_t chosen, int count) {
        if (count >= best) return;
        const std::uint64_t* uncovered = nullptr;
        for (const auto& m : masks)
            if (!(m & chosen)) {
                uncovered = &m;
                break;
            }
        if (!uncovered) {
            best = count;
            return;
        }
        std::uint64_t rest = *uncovered;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            branch(chosen | (std::uint64_t{1} << v), count + 1);
        }
    }
};

} // namespace

int tau_plus(const SignedDigraph& sd, const Limits& lim) {
    if (sd.vertex_count() > 64) throw CapExceededError("tau_plus: more than 64 vertices");
    auto cycles = non_negative_cycles(sd, lim);
    if (cycles.empty()) return 0;
    HittingSearch search(cycles, sd.vertex_count());
    search.branch(0, 0);
    return search.best;
}

int nu_plus(const SignedDigraph& sd, const Limits& lim) {
    if (sd.vertex_count() > 64) throw CapExceededError("nu_plus: more than 64 vertices");
    auto cycles = non_negative_cycles(sd, lim);
    // Plain maximum disjoint packing over the explicit list.
    std::vector<std::uint64_t> masks;
    masks.reserve(cycles.size());
    for (const auto& c : cycles) masks.push_back(c.vertex_mask());
    int best = 0;
    std::vector<int> current;
    std::function<void(std::size_t, std::uint64_t, int)> dfs = [&](std::size_t idx, std::uint64_t used,
                                                                   int count) {
        best = std::max(best, count);
        if (idx == masks.size()) return;
        int remaining = 0;
        for (std::size_t i = idx; i < masks.size(); ++i)
            if (!(masks[i] & used)) ++remaining;
        if (count + remaining <= best) return;
        if (!(masks[idx] & used)) dfs(idx + 1, used | masks[idx], count + 1);
        dfs(idx + 1, used, count);
    };
    dfs(0, 0, 0);
    return best;
}

namespace {

// tau_m for a fixed sign vector: heads of non-positive arcs are forced,
// plus a minimum FVS of the graph without them.
int tau_m_for_signs(const Digraph& base, const std::vector<int>& signs, const Limits& lim,
                    std::map<std::uint64_t, int>* memo) {
    const auto& arcs = base.arcs();
    int n = base.vertex_count();
    std::vector<char> keep(n, 1);
    std::uint64_t forced_mask = 0;
    int forced = 0;
    for (std::size_t i = 0; i < arcs.size(); ++i)
        if (signs[i] != 1 && keep[arcs[i].second]) {
            keep[arcs[i].second] = 0;
            forced_mask |= std::uint64_t{1} << arcs[i].second;
            ++forced;
        }
    if (memo) {
        auto it = memo->find(forced_mask);
        if (it != memo->end()) return it->second;
    }
    Digraph rest = base.restricted(keep);
    int value = forced + min_feedback_vertex_set(rest, lim).size;
    if (memo) (*memo)[forced_mask] = value;
    return value;
}

} // namespace

int tau_m(const SignedDigraph& sd, const Limits& lim) {
    return tau_m_for_signs(sd.base(), sd.signs(), lim, nullptr);
}

int tau_m_star(const SignedDigraph& sd, const Limits& lim) {
    int n = sd.vertex_count();
    if (n > lim.max_switch_vertices)
        throw CapExceededError("tau_m_star: vertex count exceeds switch cap");
    if (n > 63) throw CapExceededError("tau_m_star: more than 63 vertices");
    int tau = min_feedback_vertex_set(sd.base(), lim).size;
    const auto& arcs = sd.base().arcs();
    int m = static_cast<int>(arcs.size());
    std::vector<std::vector<int>> incident(n);
    for (int i = 0; i < m; ++i)
        if (arcs[i].first != arcs[i].second) {
            incident[arcs[i].first].push_back(i);
            incident[arcs[i].second].push_back(i);
        }
    std::vector<int> cur = sd.signs();
    std::map<std::uint64_t, int> memo;
    int best = tau_m_for_signs(sd.base(), cur, lim, &memo);
    // Switching by I and by its complement agree, so vertex n-1 can stay out.
    std::uint64_t total = std::uint64_t{1} << (n > 0 ? n - 1 : 0);
    for (std::uint64_t code = 1; code < total && best > tau; ++code) {
        int v = std::countr_zero(code);
        for (int i : incident[v]) cur[i] = -cur[i];
        // Cheap lower bound: forced heads alone.
        std::vector<char> seen(n, 0);
        int forced = 0;
        for (int i = 0; i < m; ++i)
            if (cur[i] != 1 && !seen[arcs[i].second]) {
                seen[arcs[i].second] = 1;
                ++forced;
            }
        if (forced < best)
            best = std::min(best, tau_m_for_signs(sd.base(), cur, lim, &memo));
    }
    return best;
}

long long signed_upper_bound(const SignedDigraph& sd, const Limits& lim) {
    int tp = tau_plus(sd, lim);
    int np = nu_plus(sd, lim);
    int tms = tau_m_star(sd, lim);
    long long positive_feedback = 1ll << tp;
    long long binomial = sum_largest_binomials(tms, std::min(np + 1, tms + 1));
    return std::min(positive_feedback, binomial);
}

SignedDigraph read_signed_digraph(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Arc> arcs;
    std::vector<int> signs;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 0)
                throw InvalidInputError("signed digraph header must be a vertex count");
            continue;
        }
        int u, v, s;
        if (!(ls >> u >> v >> s)) throw InvalidInputError("bad signed arc line: '" + line + "'");
        arcs.emplace_back(u, v);
        signs.push_back(s);
    }
    if (n < 0) throw InvalidInputError("empty signed digraph input");
    // Sort arcs and signs together to match Digraph's canonical order.
    std::vector<std::size_t> order(arcs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return arcs[a] < arcs[b]; });
    std::vector<Arc> sorted_arcs;
    std::vector<int> sorted_signs;
    for (auto i : order) {
        sorted_arcs.push_back(arcs[i]);
        sorted_signs.push_back(signs[i]);
    }
    return SignedDigraph(Digraph(n, std::move(sorted_arcs)), std::move(sorted_signs));
}

SignedDigraph parse_signed_digraph(const std::string& text) {
    std::istringstream in(text);
    return read_signed_digraph(in);
}

void write_signed_digraph(std::ostream& out, const SignedDigraph& sd) {
    out << sd.vertex_count() << "\n";
    const auto& arcs = sd.base().arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i)
        out << arcs[i].first << " " << arcs[i].second << " " << sd.signs()[i] << "\n";
}

} // namespace fixnet
