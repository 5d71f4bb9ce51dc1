#include "fixnet/cycles.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace fixnet {

// --- Cycle -------------------------------------------------------------

Cycle::Cycle(std::vector<int> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw InvalidInputError("cycle must have at least one vertex");
    auto min_it = std::min_element(vertices_.begin(), vertices_.end());
    std::rotate(vertices_.begin(), min_it, vertices_.end());
    std::vector<int> sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidInputError("cycle has repeated vertices");
}

std::uint64_t Cycle::vertex_mask() const {
    std::uint64_t m = 0;
    for (int v : vertices_) {
        if (v < 0 || v >= 64) throw CapExceededError("cycle vertex out of bitmask range");
        m |= 1ull << v;
    }
    return m;
}

Arc Cycle::arc(int i) const {
    int l = length();
    return {vertices_[i], vertices_[(i + 1) % l]};
}

bool Cycle::contains(int v) const {
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

bool Cycle::has_arc(int u, int v) const {
    for (int i = 0; i < length(); ++i)
        if (arc(i) == Arc{u, v}) return true;
    return false;
}

bool Cycle::valid_in(const Digraph& g) const {
    for (int i = 0; i < length(); ++i) {
        auto [u, v] = arc(i);
        if (!g.has_arc(u, v)) return false;
    }
    return true;
}

// --- Packing -----------------------------------------------------------

Packing::Packing(const Digraph& host, std::vector<Cycle> cycles) : cycles_(std::move(cycles)) {
    std::sort(cycles_.begin(), cycles_.end());
    std::vector<char> used(host.vertex_count(), 0);
    for (const auto& c : cycles_) {
        if (!c.valid_in(host)) throw InvalidInputError("packing cycle is not a cycle of the host digraph");
        for (int v : c.vertices()) {
            if (used[v]) throw InvalidInputError("packing cycles are not vertex-disjoint");
            used[v] = 1;
        }
    }
}

std::uint64_t Packing::vertex_mask() const {
    std::uint64_t m = 0;
    for (const auto& c : cycles_) m |= c.vertex_mask();
    return m;
}

bool Packing::covers_vertex(int v) const {
    for (const auto& c : cycles_)
        if (c.contains(v)) return true;
    return false;
}

bool Packing::has_arc(int u, int v) const {
    for (const auto& c : cycles_)
        if (c.has_arc(u, v)) return true;
    return false;
}

// --- principal paths ----------------------------------------------------

bool is_principal_path(const Digraph& g, const Packing& p, const PrincipalPath& path) {
    const auto& vs = path.vertices;
    if (vs.size() < 2) return false;
    bool closed = vs.front() == vs.back();
    std::set<int> seen;
    for (std::size_t i = 0; i + (closed ? 1 : 0) < vs.size(); ++i)
        if (!seen.insert(vs[i]).second) return false;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        if (!g.has_arc(vs[i], vs[i + 1])) return false;
        if (p.has_arc(vs[i], vs[i + 1])) return false;
    }
    for (std::size_t i = 1; i + 1 < vs.size(); ++i)
        if (p.covers_vertex(vs[i])) return false;
    return true;
}

PathStart PathStart::cycle(int index) {
    PathStart s;
    s.kind_ = Kind::CycleIndex;
    s.cycle_index_ = index;
    return s;
}

PathStart PathStart::sources() {
    PathStart s;
    s.kind_ = Kind::Sources;
    return s;
}

PathStart PathStart::vertex(int v) { return vertices({v}); }

PathStart PathStart::vertices(std::vector<int> vs) {
    PathStart s;
    s.kind_ = Kind::Explicit;
    s.vertices_ = std::move(vs);
    return s;
}

std::vector<int> PathStart::resolve(const Digraph& g, const Packing& p) const {
    switch (kind_) {
    case Kind::CycleIndex:
        if (cycle_index_ < 0 || cycle_index_ >= p.size())
            throw InvalidInputError("principal path start: cycle index out of range");
        return p.cycle(cycle_index_).vertices();
    case Kind::Sources:
        return g.sources();
    case Kind::Explicit:
        return vertices_;
    }
    return {};
}

namespace {

// Search core shared by the bool and witness variants. The path runs in the
// packing-arc-deleted digraph; packing vertices may appear only as endpoints.
// Returns the predecessor map on internal vertices plus the final hop, or
// nullopt. Paths have at least one arc, so start == target is the closed case.
std::optional<PrincipalPath> principal_path_search(const Digraph& g, const Packing& p,
                                                   const std::vector<int>& starts, int target) {
    const int n = g.vertex_count();
    std::vector<char> in_packing(n, 0);
    for (const auto& c : p.cycles())
        for (int v : c.vertices()) in_packing[v] = 1;

    auto arc_allowed = [&](int u, int v) { return !p.has_arc(u, v); };

    // Direct one-arc paths (the only paths whose arc could be a packing arc).
    for (int s : starts)
        if (g.has_arc(s, target) && arc_allowed(s, target))
            return PrincipalPath{{s, target}};

    // BFS through vertices outside the packing and distinct from target.
    // Start vertices are excluded as internals: a path through a start has
    // a shorter witness beginning there.
    std::vector<int> pred(n, -1);
    std::vector<char> visited(n, 0);
    std::deque<int> queue;
    std::vector<int> origin(n, -1); // which start vertex the tree hangs off
    for (int s : starts) visited[s] = 1;
    for (int s : starts) {
        for (int w : g.out_neighbors(s)) {
            if (w == target || in_packing[w] || visited[w]) continue;
            if (!arc_allowed(s, w)) continue; // can't happen for w outside packing, kept for clarity
            visited[w] = 1;
            pred[w] = -1;
            origin[w] = s;
            queue.push_back(w);
        }
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.out_neighbors(u)) {
            if (w == target) {
                std::vector<int> rev{target};
                for (int x = u; x != -1; x = pred[x]) rev.push_back(x);
                std::vector<int> path;
                // origin of the chain:
                int first_internal = rev.back();
                path.push_back(origin[first_internal]);
                for (auto it = rev.rbegin(); it != rev.rend(); ++it) path.push_back(*it);
                return PrincipalPath{std::move(path)};
            }
            if (in_packing[w] || visited[w]) continue;
            visited[w] = 1;
            pred[w] = u;
            origin[w] = origin[u];
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

} // namespace

bool exists_principal_path(const Digraph& g, const Packing& p, const PathStart& start, int target) {
    return principal_path_search(g, p, start.resolve(g, p), target).has_value();
}

std::optional<PrincipalPath> find_principal_path(const Digraph& g, const Packing& p,
                                                 const PathStart& start, int target) {
    return principal_path_search(g, p, start.resolve(g, p), target);
}

// --- cycle enumeration (Johnson) -----------------------------------------

namespace {

struct JohnsonState {
    const Digraph& g;
    const Limits& lim;
    std::vector<Cycle>& out;
    std::vector<char> blocked;
    std::vector<std::set<int>> block_map;
    std::vector<int> stack_;
    int root = 0;
    int min_vertex = 0;

    JohnsonState(const Digraph& graph, const Limits& limits, std::vector<Cycle>& sink)
        : g(graph), lim(limits), out(sink), blocked(graph.vertex_count(), 0),
          block_map(graph.vertex_count()) {}

    void unblock(int v) {
        blocked[v] = 0;
        auto pending = std::move(block_map[v]);
        block_map[v].clear();
        for (int w : pending)
            if (blocked[w]) unblock(w);
    }

    bool circuit(int v) {
        bool found = false;
        stack_.push_back(v);
        blocked[v] = 1;
        for (int w : g.out_neighbors(v)) {
            if (w < min_vertex || w == v) continue; // loops handled separately
            if (w == root) {
                if (static_cast<int>(out.size()) >= lim.max_cycle_count)
                    throw CapExceededError("cycle enumeration exceeded cap of " +
                                           std::to_string(lim.max_cycle_count));
                out.emplace_back(stack_);
                found = true;
            } else if (!blocked[w]) {
                if (circuit(w)) found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (int w : g.out_neighbors(v)) {
                if (w < min_vertex || w == v) continue;
                block_map[w].insert(v);
            }
        }
        stack_.pop_back();
        return found;
    }
};

} // namespace

std::vector<Cycle> enumerate_cycles(const Digraph& g, const Limits& lim) {
    std::vector<Cycle> cycles;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.has_arc(v, v)) {
            if (static_cast<int>(cycles.size()) >= lim.max_cycle_count)
                throw CapExceededError("cycle enumeration exceeded cap");
            cycles.emplace_back(std::vector<int>{v});
        }
    for (int s = 0; s < g.vertex_count(); ++s) {
        JohnsonState st(g, lim, cycles);
        st.root = s;
        st.min_vertex = s;
        st.circuit(s);
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

namespace {

// A chord is an arc between two distinct cycle vertices that is not a cycle
// arc. Loops on cycle vertices are not chords.
bool cycle_is_chordless(const Digraph& g, const Cycle& c) {
    const auto& vs = c.vertices();
    for (int u : vs)
        for (int w : g.out_neighbors(u)) {
            if (w == u) continue;
            if (!c.contains(w)) continue;
            if (!c.has_arc(u, w)) return false;
        }
    return true;
}

} // namespace

std::vector<Cycle> enumerate_chordless_cycles(const Digraph& g, const Limits& lim) {
    std::vector<Cycle> all = enumerate_cycles(g, lim);
    std::vector<Cycle> chordless;
    for (auto& c : all)
        if (cycle_is_chordless(g, c)) chordless.push_back(std::move(c));
    return chordless;
}

// --- minimum feedback vertex set -----------------------------------------

namespace {

// Shortest cycle avoiding removed vertices, or empty. BFS from each live
// vertex; loops win immediately.
std::vector<int> find_short_cycle(const Digraph& g, const std::vector<char>& removed) {
    int n = g.vertex_count();
    std::vector<int> best;
    for (int s = 0; s < n; ++s) {
        if (removed[s]) continue;
        if (g.has_arc(s, s)) return {s};
        std::vector<int> pred(n, -2);
        std::deque<int> queue{s};
        pred[s] = -1;
        bool done = false;
        while (!queue.empty() && !done) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.out_neighbors(u)) {
                if (removed[w]) continue;
                if (w == s) {
                    std::vector<int> cyc;
                    for (int x = u; x != -1; x = pred[x]) cyc.push_back(x);
                    std::reverse(cyc.begin(), cyc.end());
                    if (best.empty() || cyc.size() < best.size()) best = cyc;
                    done = true;
                    break;
                }
                if (pred[w] == -2) {
                    pred[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if (best.size() == 2) break; // can't beat a 2-cycle once loops are gone
    }
    return best;
}

bool fvs_branch(const Digraph& g, std::vector<char>& removed, int budget, std::vector<int>& chosen) {
    auto cyc = find_short_cycle(g, removed);
    if (cyc.empty()) return true;
    if (budget == 0) return false;
    for (int v : cyc) {
        removed[v] = 1;
        chosen.push_back(v);
        if (fvs_branch(g, removed, budget - 1, chosen)) return true;
        chosen.pop_back();
        removed[v] = 0;
    }
    return false;
}

} // namespace

FvsResult min_feedback_vertex_set(const Digraph& g, const Limits& lim) {
    int n = g.vertex_count();
    if (n > lim.max_enum_vertices)
        throw CapExceededError("min_feedback_vertex_set: vertex count " + std::to_string(n) +
                               " exceeds cap " + std::to_string(lim.max_enum_vertices));
    // Loop vertices are forced into every feedback vertex set.
    std::vector<char> removed(n, 0);
    std::vector<int> forced;
    for (int v = 0; v < n; ++v)
        if (g.has_arc(v, v)) {
            removed[v] = 1;
            forced.push_back(v);
        }
    for (int extra = 0; extra <= n; ++extra) {
        std::vector<int> chosen;
        std::vector<char> state = removed;
        if (fvs_branch(g, state, extra, chosen)) {
            std::vector<int> witness = forced;
            witness.insert(witness.end(), chosen.begin(), chosen.end());
            std::sort(witness.begin(), witness.end());
            return {static_cast<int>(witness.size()), witness};
        }
    }
    throw std::logic_error("min_feedback_vertex_set: unreachable");
}

// --- maximum packings -----------------------------------------------------

namespace {

struct PackingSearch {
    const std::vector<Cycle>& cycles;
    std::vector<std::uint64_t> masks;
    int best_size = -1;
    std::vector<int> best_choice;
    std::vector<int> current;
    // When set, every newly reached subset larger than best is tested with
    // this predicate before being accepted (used for specialness).
    std::function<bool(const std::vector<int>&)> accept;

    explicit PackingSearch(const std::vector<Cycle>& cs) : cycles(cs) {
        masks.reserve(cs.size());
        for (const auto& c : cs) masks.push_back(c.vertex_mask());
    }

    int compatible_remaining(std::size_t idx, std::uint64_t used) const {
        int count = 0;
        for (std::size_t i = idx; i < cycles.size(); ++i)
            if (!(masks[i] & used)) ++count;
        return count;
    }

    void consider_current() {
        if (static_cast<int>(current.size()) <= best_size) return;
        if (accept && !accept(current)) return;
        best_size = static_cast<int>(current.size());
        best_choice = current;
    }

    void dfs(std::size_t idx, std::uint64_t used) {
        if (static_cast<int>(current.size()) + compatible_remaining(idx, used) <= best_size) return;
        if (idx == cycles.size()) return;
        if (!(masks[idx] & used)) {
            current.push_back(static_cast<int>(idx));
            consider_current();
            dfs(idx + 1, used | masks[idx]);
            current.pop_back();
        }
        dfs(idx + 1, used);
    }

    void run() {
        best_size = 0;
        best_choice.clear();
        if (accept) consider_current(); // empty packing baseline
        dfs(0, 0);
    }
};

} // namespace

PackingResult max_cycle_packing(const Digraph& g, const Limits& lim) {
    if (g.vertex_count() > 64) throw CapExceededError("max_cycle_packing: more than 64 vertices");
    auto cycles = enumerate_chordless_cycles(g, lim);
    PackingSearch search(cycles);
    search.run();
    std::vector<Cycle> chosen;
    for (int i : search.best_choice) chosen.push_back(cycles[i]);
    return {search.best_size, Packing(g, std::move(chosen))};
}

int circumference(const Digraph& g, const Limits& lim) {
    auto cycles = enumerate_chordless_cycles(g, lim);
    if (cycles.empty()) throw InvalidInputError("circumference: digraph is acyclic");
    int c = 0;
    for (const auto& cy : cycles) c = std::max(c, cy.length());
    return c;
}

bool is_special_packing(const Digraph& g, const Packing& p) {
    for (int i = 0; i < p.size(); ++i) {
        // Starts for the antecedent: all vertices of the other cycles.
        std::vector<int> others;
        for (int j = 0; j < p.size(); ++j)
            if (j != i)
                for (int v : p.cycle(j).vertices()) others.push_back(v);
        if (others.empty()) continue;
        for (int v : p.cycle(i).vertices()) {
            if (!exists_principal_path(g, p, PathStart::vertices(others), v)) continue;
            bool matched = exists_principal_path(g, p, PathStart::cycle(i), v) ||
                           exists_principal_path(g, p, PathStart::sources(), v);
            if (!matched) return false;
        }
    }
    return true;
}

PackingResult max_special_packing(const Digraph& g, const Limits& lim) {
    if (g.vertex_count() > 64) throw CapExceededError("max_special_packing: more than 64 vertices");
    auto cycles = enumerate_cycles(g, lim);
    PackingSearch search(cycles);
    search.accept = [&](const std::vector<int>& choice) {
        std::vector<Cycle> chosen;
        chosen.reserve(choice.size());
        for (int i : choice) chosen.push_back(cycles[i]);
        return is_special_packing(g, Packing(g, std::move(chosen)));
    };
    search.run();
    std::vector<Cycle> chosen;
    for (int i : search.best_choice) chosen.push_back(cycles[i]);
    return {search.best_size, Packing(g, std::move(chosen))};
}

bool has_independent_cycle_pair(const Digraph& g, const Limits& lim) {
    // If an independent pair exists, restricting each cycle to a chordless
    // cycle inside its vertex set keeps the pair independent, so chordless
    // cycles suffice.
    auto cycles = enumerate_chordless_cycles(g, lim);
    std::vector<std::uint64_t> masks;
    if (g.vertex_count() > 64) throw CapExceededError("has_independent_cycle_pair: more than 64 vertices");
    masks.reserve(cycles.size());
    for (const auto& c : cycles) masks.push_back(c.vertex_mask());
    for (std::size_t a = 0; a < cycles.size(); ++a)
        for (std::size_t b = a + 1; b < cycles.size(); ++b) {
            if (masks[a] & masks[b]) continue;
            bool linked = false;
            for (int u : cycles[a].vertices()) {
                for (int w : g.out_neighbors(u))
                    if (masks[b] & (1ull << w)) {
                        linked = true;
                        break;
                    }
                if (linked) break;
            }
            if (!linked)
                for (int u : cycles[b].vertices()) {
                    for (int w : g.out_neighbors(u))
                        if (masks[a] & (1ull << w)) {
                            linked = true;
                            break;
                        }
                    if (linked) break;
                }
            if (!linked) return true;
        }
    return false;
}

// --- cycle selection procedure ----------------------------------------

namespace {

// Parts q != part_of(u) from which g reaches u by a path whose internal
// vertices avoid U entirely.
std::vector<std::set<int>> direct_reach_sets(const Digraph& g, const std::vector<int>& part_of,
                                             const std::vector<int>& targets) {
    int n = g.vertex_count();
    std::vector<std::set<int>> result(targets.size());
    for (std::size_t t = 0; t < targets.size(); ++t) {
        int u = targets[t];
        // Reverse BFS from u through vertices outside U.
        std::vector<char> visited(n, 0);
        std::deque<int> queue;
        auto feed = [&](int w) {
            if (part_of[w] >= 0) {
                if (part_of[w] != part_of[u]) result[t].insert(part_of[w]);
            } else if (!visited[w]) {
                visited[w] = 1;
                queue.push_back(w);
            }
        };
        for (int w : g.in_neighbors(u)) feed(w);
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int w : g.in_neighbors(x)) feed(w);
        }
    }
    return result;
}

struct SelectionContext {
    // reach[i][u] = parts (other than i) reaching marked vertex u of part i.
    std::vector<std::map<int, std::set<int>>> reach;

    // One round of the source/domination argument over active parts K with a
    // single marked vertex per part.
    std::vector<int> base_round(const std::vector<int>& K, const std::vector<int>& mark) const {
        int k = static_cast<int>(K.size());
        std::set<int> active(K.begin(), K.end());
        // H on positions 0..k-1: arc q -> i when part K[q] reaches mark of K[i].
        std::vector<Arc> arcs;
        std::vector<int> indeg(k, 0);
        for (int i = 0; i < k; ++i) {
            const auto& r = reach[K[i]].at(mark[i]);
            for (int q = 0; q < k; ++q) {
                if (q == i) continue;
                if (r.count(K[q])) {
                    arcs.emplace_back(q, i);
                    ++indeg[i];
                }
            }
        }
        std::vector<int> sources_pos;
        for (int i = 0; i < k; ++i)
            if (indeg[i] == 0) sources_pos.push_back(i);
        std::vector<int> I;
        if (3 * static_cast<int>(sources_pos.size()) >= k) {
            for (int i : sources_pos) I.push_back(K[i]);
            return I;
        }
        // Augment so every vertex has in-degree >= 1, then carve out a
        // minimum dominating set.
        std::vector<char> is_source(k, 0);
        for (int i : sources_pos) is_source[i] = 1;
        for (int s : sources_pos)
            for (int q = 0; q < k; ++q)
                if (!is_source[q]) arcs.emplace_back(q, s);
        Digraph h(k, std::move(arcs));
        auto dom = min_dominating_set(h);
        std::vector<char> in_dom(k, 0);
        for (int d : dom.vertices) in_dom[d] = 1;
        for (int i = 0; i < k; ++i)
            if (!in_dom[i]) I.push_back(K[i]);
        return I;
    }

    std::vector<int> solve(const std::vector<int>& K, std::vector<std::vector<int>> marks, int level) {
        if (level <= 1) {
            std::vector<int> single;
            for (const auto& m : marks) single.push_back(m.front());
            return base_round(K, single);
        }
        std::vector<int> first;
        for (const auto& m : marks) first.push_back(m.front());
        std::vector<int> I1 = base_round(K, first);
        // Keep I1's parts; peel the handled vertex unless it is the only one.
        std::vector<std::vector<int>> next_marks;
        for (int part : I1) {
            std::size_t pos = std::find(K.begin(), K.end(), part) - K.begin();
            auto m = marks[pos];
            if (m.size() > 1) m.erase(m.begin());
            next_marks.push_back(std::move(m));
        }
        return solve(I1, std::move(next_marks), level - 1);
    }
};

} // namespace

std::vector<int> dominating_selection(const Digraph& g, const std::vector<std::vector<int>>& parts,
                                      const std::vector<std::vector<int>>& marked) {
    int n = g.vertex_count();
    int k = static_cast<int>(parts.size());
    if (k == 0) throw InvalidInputError("dominating_selection: no parts");
    if (marked.size() != parts.size())
        throw InvalidInputError("dominating_selection: marked sets must match parts");
    std::vector<int> part_of(n, -1);
    for (int i = 0; i < k; ++i) {
        if (parts[i].empty()) throw InvalidInputError("dominating_selection: empty part");
        for (int v : parts[i]) {
            if (v < 0 || v >= n) throw InvalidInputError("dominating_selection: vertex out of range");
            if (part_of[v] != -1) throw InvalidInputError("dominating_selection: parts overlap");
            part_of[v] = i;
        }
    }
    int level = 0;
    for (int i = 0; i < k; ++i) {
        if (marked[i].empty()) throw InvalidInputError("dominating_selection: empty marked set");
        for (int u : marked[i])
            if (u < 0 || u >= n || part_of[u] != i)
                throw InvalidInputError("dominating_selection: marked vertex not in its part");
        level = std::max(level, static_cast<int>(marked[i].size()));
    }

    SelectionContext ctx;
    ctx.reach.resize(k);
    std::vector<int> all_marked;
    for (int i = 0; i < k; ++i)
        for (int u : marked[i]) all_marked.push_back(u);
    auto reach_sets = direct_reach_sets(g, part_of, all_marked);
    {
        std::size_t pos = 0;
        for (int i = 0; i < k; ++i)
            for (int u : marked[i]) ctx.reach[i][u] = std::move(reach_sets[pos++]);
    }

    std::vector<int> K(k);
    std::iota(K.begin(), K.end(), 0);
    std::vector<std::vector<int>> marks;
    for (int i = 0; i < k; ++i) {
        auto m = marked[i];
        std::sort(m.begin(), m.end());
        marks.push_back(std::move(m));
    }
    auto I = ctx.solve(K, std::move(marks), level);
    std::sort(I.begin(), I.end());

    long long bound = 1;
    for (int i = 0; i < level; ++i) bound *= 3;
    if (static_cast<long long>(I.size()) * bound < k)
        throw std::logic_error("dominating_selection: selection smaller than k/3^l");
    return I;
}

} // namespace fixnet
