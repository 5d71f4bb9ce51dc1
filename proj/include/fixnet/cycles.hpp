#pragma once

#include "fixnet/digraph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fixnet {

/// Directed cycle without repeated vertices, held in rotation-canonical
/// form: the sequence starts at its smallest vertex. A loop is the
/// length-one cycle (v).
class Cycle {
public:
    Cycle() = default;
    explicit Cycle(std::vector<int> vertices); // canonicalizes the rotation

    int length() const { return static_cast<int>(vertices_.size()); }
    const std::vector<int>& vertices() const { return vertices_; }
    std::uint64_t vertex_mask() const; // requires all vertices < 64

    /// Arc from position i to position i+1 (cyclically).
    Arc arc(int i) const;
    bool contains(int v) const;
    bool has_arc(int u, int v) const;

    /// Checks every consecutive pair is an arc of g.
    bool valid_in(const Digraph& g) const;

    friend bool operator==(const Cycle&, const Cycle&) = default;
    friend auto operator<=>(const Cycle& a, const Cycle& b) { return a.vertices_ <=> b.vertices_; }

private:
    std::vector<int> vertices_;
};

/// Set of pairwise vertex-disjoint cycles of a host digraph. Cycles are
/// stored sorted for deterministic comparisons.
class Packing {
public:
    Packing() = default;
    Packing(const Digraph& host, std::vector<Cycle> cycles); // validates

    int size() const { return static_cast<int>(cycles_.size()); }
    const std::vector<Cycle>& cycles() const { return cycles_; }
    const Cycle& cycle(int i) const { return cycles_[i]; }
    std::uint64_t vertex_mask() const;
    bool covers_vertex(int v) const;
    bool has_arc(int u, int v) const; // arc of some packing cycle

private:
    std::vector<Cycle> cycles_;
};

/// Path v_0 .. v_l, all vertices distinct except possibly v_0 = v_l,
/// with no arc and no internal vertex in a given packing.
struct PrincipalPath {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
};
bool is_principal_path(const Digraph& g, const Packing& p, const PrincipalPath& path);

/// Where a principal-path search may start.
class PathStart {
public:
    static PathStart cycle(int index);             // all vertices of packing cycle #index
    static PathStart sources();                    // all sources of the digraph
    static PathStart vertex(int v);                // a single vertex
    static PathStart vertices(std::vector<int> vs);

    std::vector<int> resolve(const Digraph& g, const Packing& p) const;

private:
    enum class Kind { CycleIndex, Sources, Explicit } kind_ = Kind::Explicit;
    int cycle_index_ = -1;
    std::vector<int> vertices_;
};

bool exists_principal_path(const Digraph& g, const Packing& p, const PathStart& start, int target);
std::optional<PrincipalPath> find_principal_path(const Digraph& g, const Packing& p,
                                                 const PathStart& start, int target);

/// All elementary cycles (loops included), canonical and sorted.
/// Throws CapExceededError past lim.max_cycle_count.
std::vector<Cycle> enumerate_cycles(const Digraph& g, const Limits& lim = default_limits());

/// Cycles with no chord. A chord of C is an arc uv with u != v, both on C,
/// that is not an arc of C; loops do not count as chords.
std::vector<Cycle> enumerate_chordless_cycles(const Digraph& g, const Limits& lim = default_limits());

struct FvsResult {
    int size = 0;
    std::vector<int> vertices;
};

/// Minimum feedback vertex set (tau), exact branch and bound.
FvsResult min_feedback_vertex_set(const Digraph& g, const Limits& lim = default_limits());

struct PackingResult {
    int size = 0;
    Packing packing;
};

/// Maximum cycle packing (nu). A maximum packing of chordless cycles
/// attains nu, so the search runs over chordless cycles only.
PackingResult max_cycle_packing(const Digraph& g, const Limits& lim = default_limits());

/// Maximum length of a chordless cycle. Requires a cycle.
int circumference(const Digraph& g, const Limits& lim = default_limits());

/// Specialness test: for every cycle C_i and vertex v on C_i, a principal
/// path into v from another cycle must be matched by a principal path into
/// v from C_i itself or from a source (closed paths at v count).
bool is_special_packing(const Digraph& g, const Packing& p);

/// Maximum special packing (nu*). Searches over all packings built from
/// all elementary cycles, not just chordless ones.
PackingResult max_special_packing(const Digraph& g, const Limits& lim = default_limits());

/// True iff two vertex-disjoint cycles with no arc between them in either
/// direction exist.
bool has_independent_cycle_pair(const Digraph& g, const Limits& lim = default_limits());

/// Cycle selection: given disjoint parts U_1..U_k of U and non-empty
/// marked sets U'_i (|U'_i| <= l), returns I of size >= k/3^l such that for
/// every i in I and marked u in U'_i, either some part outside I reaches u
/// by a path with no internal vertex in U, or no other part reaches u that
/// way at all. Indices are 0-based.
std::vector<int> dominating_selection(const Digraph& g,
                                      const std::vector<std::vector<int>>& parts,
                                      const std::vector<std::vector<int>>& marked);

} // namespace fixnet
