#include "fixnet/families.hpp"

namespace fixnet {

Digraph build_k_star(int n) {
    if (n < 1) throw InvalidInputError("build_k_star: n must be at least 1");
    auto id = [n](int i, int j) { return i * n + j; };
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) arcs.emplace_back(id(i, j), id(i, (j + 1) % n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i) arcs.emplace_back(id(i, i), id(j, i));
    return Digraph(n * n, std::move(arcs));
}

namespace {

Digraph loop_cycle(int n) {
    if (n < 1) throw InvalidInputError("loop-cycle: n must be at least 1");
    std::vector<Arc> arcs;
    for (int v = 0; v < n; ++v) {
        arcs.emplace_back(v, v);
        if (n > 1) arcs.emplace_back(v, (v + 1) % n);
    }
    return Digraph(n, std::move(arcs));
}

// Vertex 0 is the source; 1..n-1 form the looped ring it feeds.
Digraph sourced_loop_cycle(int n) {
    if (n < 2) throw InvalidInputError("sourced-loop-cycle: n must be at least 2");
    int ring = n - 1;
    std::vector<Arc> arcs;
    for (int i = 0; i < ring; ++i) {
        int v = 1 + i;
        arcs.emplace_back(v, v);
        if (ring > 1) arcs.emplace_back(v, 1 + (i + 1) % ring);
        arcs.emplace_back(0, v);
    }
    return Digraph(n, std::move(arcs));
}

// Outer vertices 0..n/2-1 (looped ring), inner partner of i is n/2 + i.
Digraph pendant_loop_cycle(int n) {
    if (n < 2 || n % 2 != 0) throw InvalidInputError("pendant-loop-cycle: n must be even and >= 2");
    int half = n / 2;
    std::vector<Arc> arcs;
    for (int i = 0; i < half; ++i) {
        arcs.emplace_back(i, i);
        if (half > 1) arcs.emplace_back(i, (i + 1) % half);
        arcs.emplace_back(i, half + i);
        arcs.emplace_back(half + i, i);
    }
    return Digraph(n, std::move(arcs));
}

Digraph star_of_2_cycles(int n) {
    if (n < 2) throw InvalidInputError("star-of-2-cycles: n must be at least 2");
    std::vector<Arc> arcs;
    for (int leaf = 1; leaf < n; ++leaf) {
        arcs.emplace_back(0, leaf);
        arcs.emplace_back(leaf, 0);
    }
    return Digraph(n, std::move(arcs));
}

Digraph transitive_tournament_looped(int n) {
    if (n < 1) throw InvalidInputError("tprime: n must be at least 1");
    std::vector<Arc> arcs;
    for (int v = 0; v < n; ++v) arcs.emplace_back(v, v);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < u; ++v) arcs.emplace_back(u, v);
    return Digraph(n, std::move(arcs));
}

Digraph complete_symmetric(int n) {
    if (n < 1) throw InvalidInputError("complete: n must be at least 1");
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) arcs.emplace_back(u, v);
    return Digraph(n, std::move(arcs));
}

Digraph complete_bipartite_symmetric(int n) {
    if (n < 1) throw InvalidInputError("complete-bipartite: n must be at least 1");
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = n; v < 2 * n; ++v) {
            arcs.emplace_back(u, v);
            arcs.emplace_back(v, u);
        }
    return Digraph(2 * n, std::move(arcs));
}

} // namespace

Digraph build_family(const std::string& name, int n) {
    if (name == "loop-cycle") return loop_cycle(n);
    if (name == "sourced-loop-cycle") return sourced_loop_cycle(n);
    if (name == "pendant-loop-cycle") return pendant_loop_cycle(n);
    if (name == "star-of-2-cycles") return star_of_2_cycles(n);
    if (name == "tprime" || name == "T'") return transitive_tournament_looped(n);
    if (name == "kstar") return build_k_star(n);
    if (name == "complete") return complete_symmetric(n);
    if (name == "complete-bipartite") return complete_bipartite_symmetric(n);
    throw InvalidInputError("unknown family: " + name);
}

} // namespace fixnet
