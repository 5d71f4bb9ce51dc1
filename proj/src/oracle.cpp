#include "fixnet/oracle.hpp"

#include "fixnet/poset.hpp"

#include <algorithm>
#include <bit>

namespace fixnet {

namespace {

// Packed truth table: bit m of the word is the entry at valuation m.
// Fits d <= 5 (32 entries).
using PackedTable = std::uint32_t;

// -1 antitone, +1 isotone, 0 mixed, 2 inessential, for packed tables.
int packed_sign(PackedTable t, int d, int j) {
    bool up = false, down = false;
    unsigned bit = 1u << j;
    for (unsigned m = 0; m < (1u << d); ++m) {
        if (m & bit) continue;
        unsigned lo = (t >> m) & 1u, hi = (t >> (m | bit)) & 1u;
        if (lo < hi) up = true;
        if (lo > hi) down = true;
    }
    if (!up && !down) return 2;
    if (up && down) return 0;
    return up ? 1 : -1;
}

// All tables whose per-input sign behavior matches `signs` exactly
// (essential included). Built coordinate by coordinate: a +1 coordinate
// doubles with pairs a <= b, a -1 coordinate with a >= b, a 0 coordinate
// with arbitrary pairs, then the exact filter prunes.
std::vector<PackedTable> sign_exact_tables(const std::vector<int>& signs, long long cap) {
    int d = static_cast<int>(signs.size());
    if (d > 5) throw CapExceededError("oracle: in-degree above 5");
    // A per-vertex pool beyond a few million tables cannot fit any product
    // budget, so cut the doubling before it allocates seriously.
    long long list_cap = std::min(cap, 4000000ll);
    std::vector<PackedTable> tables{0u, 1u};
    for (int j = 0; j < d; ++j) {
        unsigned width = 1u << j;
        std::vector<PackedTable> next;
        for (PackedTable a : tables)
            for (PackedTable b : tables) {
                if (signs[j] == 1 && (a & ~b)) continue;
                if (signs[j] == -1 && (b & ~a)) continue;
                next.push_back(a | (b << width));
                if (static_cast<long long>(next.size()) > list_cap)
                    throw CapExceededError("oracle: per-vertex function pool exceeded budget");
            }
        tables = std::move(next);
    }
    std::vector<PackedTable> exact;
    for (PackedTable t : tables) {
        bool ok = true;
        for (int j = 0; j < d && ok; ++j)
            if (packed_sign(t, d, j) != signs[j]) ok = false;
        if (ok) exact.push_back(t);
    }
    return exact;
}

std::vector<std::uint8_t> unpack(PackedTable t, int d) {
    std::vector<std::uint8_t> table(std::size_t{1} << d);
    for (std::size_t m = 0; m < table.size(); ++m) table[m] = (t >> m) & 1u;
    return table;
}

struct CandidateSpace {
    std::vector<std::vector<PackedTable>> per_vertex;
    long long total = 1;
};

CandidateSpace build_space(const Digraph& g, const std::vector<std::vector<int>>& signs,
                           const OracleOptions& opts) {
    CandidateSpace space;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.in_degree(v) > opts.limits.oracle_max_in_degree)
            throw CapExceededError("oracle: vertex " + std::to_string(v) + " has in-degree above " +
                                   std::to_string(opts.limits.oracle_max_in_degree));
        auto tables = sign_exact_tables(signs[v], opts.limits.oracle_budget);
        if (tables.empty())
            throw InvalidInputError("oracle: no function matches the required signs at vertex " +
                                    std::to_string(v));
        if (space.total > opts.limits.oracle_budget / static_cast<long long>(tables.size()))
            throw CapExceededError("oracle: candidate count exceeds budget");
        space.total *= static_cast<long long>(tables.size());
        space.per_vertex.push_back(std::move(tables));
    }
    return space;
}

// Fixed-point counting over candidates. For n <= 6 every (vertex, table)
// pair is precomputed as a 2^n-state output column, so one candidate costs
// n AND/XOR words.
OracleResult run_oracle(const Digraph& g, const std::vector<std::vector<int>>& signs,
                        const OracleOptions& opts) {
    int n = g.vertex_count();
    if (n > opts.limits.max_enum_vertices)
        throw CapExceededError("oracle: vertex count exceeds cap");
    CandidateSpace space = build_space(g, signs, opts);

    std::vector<std::vector<int>> input_lists(n);
    for (int v = 0; v < n; ++v) {
        auto in = g.in_neighbors(v);
        input_lists[v].assign(in.begin(), in.end());
    }

    auto make_network = [&](const std::vector<int>& choice) {
        std::vector<NodeFunction> nodes(n);
        for (int v = 0; v < n; ++v) {
            nodes[v].inputs = input_lists[v];
            nodes[v].table = unpack(space.per_vertex[v][choice[v]], g.in_degree(v));
        }
        return BooleanNetwork(n, std::move(nodes));
    };

    std::vector<int> choice(n, 0);
    if (opts.start_index < 0 || opts.start_index >= space.total)
        throw InvalidInputError("oracle: start index out of range");
    {
        long long rest = opts.start_index;
        for (int v = n - 1; v >= 0; --v) {
            long long radix = static_cast<long long>(space.per_vertex[v].size());
            choice[v] = static_cast<int>(rest % radix);
            rest /= radix;
        }
    }

    long long best = -1;
    std::vector<int> best_choice;
    long long examined = 0;

    if (n <= 6) {
        unsigned states = 1u << n;
        std::uint64_t full = states == 64 ? ~0ull : (1ull << states) - 1;
        std::vector<std::uint64_t> var_col(n, 0);
        for (int v = 0; v < n; ++v)
            for (unsigned s = 0; s < states; ++s)
                if ((s >> v) & 1u) var_col[v] |= 1ull << s;
        // columns[v][t] = output of table t at every state.
        std::vector<std::vector<std::uint64_t>> columns(n);
        for (int v = 0; v < n; ++v) {
            columns[v].reserve(space.per_vertex[v].size());
            for (PackedTable t : space.per_vertex[v]) {
                std::uint64_t col = 0;
                for (unsigned s = 0; s < states; ++s) {
                    unsigned idx = 0;
                    for (std::size_t j = 0; j < input_lists[v].size(); ++j)
                        idx |= ((s >> input_lists[v][j]) & 1u) << j;
                    if ((t >> idx) & 1u) col |= 1ull << s;
                }
                columns[v].push_back(col);
            }
        }
        for (long long index = opts.start_index; index < space.total; ++index) {
            std::uint64_t ok = full;
            for (int v = 0; v < n && ok; ++v)
                ok &= ~(columns[v][choice[v]] ^ var_col[v]);
            long long count = std::popcount(ok);
            ++examined;
            if (count > best) {
                best = count;
                best_choice = choice;
            }
            if (opts.progress && examined % opts.progress_stride == 0)
                opts.progress(examined, space.total - opts.start_index);
            for (int v = n - 1; v >= 0; --v) {
                if (++choice[v] < static_cast<int>(space.per_vertex[v].size())) break;
                choice[v] = 0;
            }
        }
    } else {
        for (long long index = opts.start_index; index < space.total; ++index) {
            long long count = count_fixed_points(make_network(choice), opts.limits);
            ++examined;
            if (count > best) {
                best = count;
                best_choice = choice;
            }
            if (opts.progress && examined % opts.progress_stride == 0)
                opts.progress(examined, space.total - opts.start_index);
            for (int v = n - 1; v >= 0; --v) {
                if (++choice[v] < static_cast<int>(space.per_vertex[v].size())) break;
                choice[v] = 0;
            }
        }
    }

    OracleResult result;
    result.value = best;
    result.candidates = examined;
    result.witness = make_network(best_choice);
    // Safety net: the witness's signed interaction graph must match.
    auto sd = signed_interaction_graph(result.witness);
    if (sd.base() != g)
        throw PostconditionError("oracle: witness interaction graph mismatch");
    for (int v = 0; v < n; ++v)
        for (std::size_t j = 0; j < input_lists[v].size(); ++j)
            if (sd.sign(input_lists[v][j], v) != signs[v][j])
                throw PostconditionError("oracle: witness sign mismatch");
    return result;
}

} // namespace

std::vector<std::vector<std::uint8_t>> enumerate_monotone_functions(int d,
                                                                    bool require_all_essential) {
    if (d < 0 || d > 5) throw CapExceededError("enumerate_monotone_functions: d must be 0..5");
    // Monotone with every sign +1; drop the essential requirement by
    // rebuilding the doubling without the exact filter.
    std::vector<PackedTable> tables{0u, 1u};
    for (int j = 0; j < d; ++j) {
        unsigned width = 1u << j;
        std::vector<PackedTable> next;
        for (PackedTable a : tables)
            for (PackedTable b : tables)
                if (!(a & ~b)) next.push_back(a | (b << width));
        tables = std::move(next);
    }
    std::vector<std::vector<std::uint8_t>> out;
    for (PackedTable t : tables) {
        if (require_all_essential) {
            bool essential = true;
            for (int j = 0; j < d && essential; ++j)
                if (packed_sign(t, d, j) == 2) essential = false;
            if (!essential) continue;
        }
        out.push_back(unpack(t, d));
    }
    return out;
}

OracleResult phi_m_exact(const Digraph& g, const OracleOptions& opts) {
    std::vector<std::vector<int>> signs(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        signs[v].assign(g.in_degree(v), 1);
    return run_oracle(g, signs, opts);
}

OracleResult phi_exact(const SignedDigraph& sd, const OracleOptions& opts) {
    const Digraph& g = sd.base();
    std::vector<std::vector<int>> signs(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.in_neighbors(v)) signs[v].push_back(sd.sign(u, v));
    return run_oracle(g, signs, opts);
}

} // namespace fixnet
