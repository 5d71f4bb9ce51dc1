#include "fixnet/digraph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

namespace fixnet {

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n < 0) throw InvalidInputError("vertex count must be non-negative");
    std::sort(arcs_.begin(), arcs_.end());
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        auto [u, v] = arcs_[i];
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw InvalidInputError("arc endpoint out of range: " + std::to_string(u) + " " +
                                    std::to_string(v));
        if (i > 0 && arcs_[i] == arcs_[i - 1])
            throw InvalidInputError("duplicate arc: " + std::to_string(u) + " " + std::to_string(v));
    }
    out_.assign(n_, {});
    in_.assign(n_, {});
    for (auto [u, v] : arcs_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    for (auto& a : in_) std::sort(a.begin(), a.end());
    // out_ lists are already sorted because arcs_ is.
}

bool Digraph::has_arc(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& o = out_[u];
    return std::binary_search(o.begin(), o.end(), v);
}

std::span<const int> Digraph::out_neighbors(int v) const { return out_[v]; }
std::span<const int> Digraph::in_neighbors(int v) const { return in_[v]; }

int Digraph::max_in_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, in_degree(v));
    return d;
}

std::vector<int> Digraph::sources() const {
    std::vector<int> s;
    for (int v = 0; v < n_; ++v)
        if (in_[v].empty()) s.push_back(v);
    return s;
}

bool Digraph::is_acyclic() const {
    // Kahn peeling.
    std::vector<int> indeg(n_);
    for (int v = 0; v < n_; ++v) indeg[v] = in_degree(v);
    for (int v = 0; v < n_; ++v)
        if (has_arc(v, v)) return false;
    std::vector<int> stack;
    for (int v = 0; v < n_; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int w : out_[v])
            if (--indeg[w] == 0) stack.push_back(w);
    }
    return seen == n_;
}

Digraph Digraph::restricted(const std::vector<char>& keep) const {
    std::vector<Arc> arcs;
    for (auto [u, v] : arcs_)
        if (keep[u] && keep[v]) arcs.emplace_back(u, v);
    return Digraph(n_, std::move(arcs));
}

namespace {

// Iterative Tarjan.
struct TarjanState {
    const Digraph& g;
    std::vector<int> index, low, stack_;
    std::vector<char> on_stack;
    int counter = 0;
    std::vector<std::vector<int>> components;

    explicit TarjanState(const Digraph& graph)
        : g(graph), index(graph.vertex_count(), -1), low(graph.vertex_count(), 0),
          on_stack(graph.vertex_count(), 0) {}

    void run(int root) {
        struct Frame {
            int v;
            std::size_t next_edge;
        };
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack_.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            auto& f = frames.back();
            auto out = g.out_neighbors(f.v);
            if (f.next_edge < out.size()) {
                int w = out[f.next_edge++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack_.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                if (low[v] == index[v]) {
                    std::vector<int> comp;
                    while (true) {
                        int w = stack_.back();
                        stack_.pop_back();
                        on_stack[w] = 0;
                        comp.push_back(w);
                        if (w == v) break;
                    }
                    std::sort(comp.begin(), comp.end());
                    components.push_back(std::move(comp));
                }
            }
        }
    }
};

} // namespace

std::vector<std::vector<int>> strongly_connected_components(const Digraph& g) {
    TarjanState st(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (st.index[v] == -1) st.run(v);
    // Tarjan emits components in reverse topological order.
    std::reverse(st.components.begin(), st.components.end());
    return st.components;
}

DominatingSetResult min_dominating_set(const Digraph& g, const Limits& lim) {
    int n = g.vertex_count();
    if (n > lim.max_enum_vertices || n > 63)
        throw CapExceededError("min_dominating_set: too many vertices (" + std::to_string(n) + ")");
    if (n == 0) return {0, {}};
    std::vector<std::uint64_t> in_mask(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.in_neighbors(v)) in_mask[v] |= 1ull << u;

    auto dominates = [&](std::uint64_t d) {
        for (int v = 0; v < n; ++v)
            if (!((d >> v) & 1) && !(in_mask[v] & d)) return false;
        return true;
    };

    // Sizes ascending; within a size, lexicographically smallest vertex set
    // first (combination order on sorted indices).
    for (int size = 0; size <= n; ++size) {
        std::vector<int> comb(size);
        for (int i = 0; i < size; ++i) comb[i] = i;
        while (true) {
            std::uint64_t d = 0;
            for (int v : comb) d |= 1ull << v;
            if (dominates(d)) return {size, comb};
            int i = size - 1;
            while (i >= 0 && comb[i] == n - size + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (size == 0 && dominates(0)) return {0, {}};
    }
    throw std::logic_error("min_dominating_set: unreachable");
}

Digraph read_digraph(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Arc> arcs;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 0) throw InvalidInputError("digraph header must be a vertex count");
            continue;
        }
        int u, v;
        if (!(ls >> u >> v)) throw InvalidInputError("bad arc line: '" + line + "'");
        std::string extra;
        if (ls >> extra)
            throw InvalidInputError("unexpected third field on arc line (signed digraph?): '" +
                                    line + "'");
        arcs.emplace_back(u, v);
    }
    if (n < 0) throw InvalidInputError("empty digraph input");
    return Digraph(n, std::move(arcs));
}

Digraph parse_digraph(const std::string& text) {
    std::istringstream in(text);
    return read_digraph(in);
}

void write_digraph(std::ostream& out, const Digraph& g) {
    out << g.vertex_count() << "\n";
    for (auto [u, v] : g.arcs()) out << u << " " << v << "\n";
}

std::string format_digraph(const Digraph& g) {
    std::ostringstream out;
    write_digraph(out, g);
    return out.str();
}

} // namespace fixnet
