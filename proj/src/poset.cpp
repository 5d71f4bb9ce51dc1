#include "fixnet/poset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <istream>
#include <ostream>

namespace fixnet {

PointSet::PointSet(int dimension, std::vector<State> states)
    : n_(dimension), states_(std::move(states)) {
    if (dimension < 0 || dimension > 31) throw InvalidInputError("point set: bad dimension");
    std::sort(states_.begin(), states_.end());
    if (std::adjacent_find(states_.begin(), states_.end()) != states_.end())
        throw InvalidInputError("point set: duplicate states");
    State limit_mask = dimension == 31 ? 0x7FFFFFFFu : ((State{1} << dimension) - 1);
    for (State s : states_)
        if (s & ~limit_mask) throw InvalidInputError("point set: state outside dimension");
}

bool PointSet::contains(State x) const {
    return std::binary_search(states_.begin(), states_.end(), x);
}

PointSet project_onto(const PointSet& points, const std::vector<int>& I, const BooleanNetwork& f,
                      bool monotone_outside) {
    std::vector<int> coords = I;
    std::sort(coords.begin(), coords.end());
    if (std::adjacent_find(coords.begin(), coords.end()) != coords.end())
        throw InvalidInputError("project_onto: repeated coordinate");
    for (int c : coords)
        if (c < 0 || c >= points.dimension())
            throw InvalidInputError("project_onto: coordinate out of range");

    if (monotone_outside) {
        std::vector<char> inside(points.dimension(), 0);
        for (int c : coords) inside[c] = 1;
        for (int v = 0; v < f.size(); ++v)
            if (!inside[v] && !is_component_monotone(f, v))
                throw InvalidInputError("project_onto: component " + std::to_string(v) +
                                        " is not monotone outside I");
    }

    auto restrict_state = [&](State x) {
        State y = 0;
        for (std::size_t j = 0; j < coords.size(); ++j)
            if ((x >> coords[j]) & 1u) y |= State{1} << j;
        return y;
    };

    std::vector<State> projected;
    projected.reserve(points.size());
    for (State x : points.states()) projected.push_back(restrict_state(x));

    {
        auto sorted = projected;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw PostconditionError("project_onto: projection is not injective (I is not a "
                                     "feedback vertex set of the interaction graph?)");
    }
    if (monotone_outside) {
        const auto& orig = points.states();
        for (std::size_t a = 0; a < orig.size(); ++a)
            for (std::size_t b = 0; b < orig.size(); ++b) {
                bool full = state_leq(orig[a], orig[b]);
                bool restr = state_leq(projected[a], projected[b]);
                if (full != restr)
                    throw PostconditionError("project_onto: projection is not an order isomorphism");
            }
    }
    return PointSet(static_cast<int>(coords.size()), std::move(projected));
}

ChainResult longest_chain(const PointSet& points) {
    const auto& s = points.states();
    int m = points.size();
    if (m == 0) return {0, {}};
    // States sorted ascending as integers; x < y in the poset implies x < y
    // as integers, so a single forward DP pass suffices.
    std::vector<int> best(m, 1), pred(m, -1);
    int best_end = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < i; ++j)
            if (s[j] != s[i] && state_leq(s[j], s[i]) && best[j] + 1 > best[i]) {
                best[i] = best[j] + 1;
                pred[i] = j;
            }
        if (best[i] > best[best_end]) best_end = i;
    }
    std::vector<State> chain;
    for (int i = best_end; i != -1; i = pred[i]) chain.push_back(s[i]);
    std::reverse(chain.begin(), chain.end());
    return {best[best_end], std::move(chain)};
}

namespace {

// Hungarian-style augmenting paths on the strict comparability relation;
// by Mirsky/Dilworth the antichain complements a minimum chain cover.
struct ComparabilityMatching {
    const std::vector<State>& s;
    std::vector<std::vector<int>> above; // j above i: s[i] < s[j]
    std::vector<int> match_up, match_down;

    explicit ComparabilityMatching(const std::vector<State>& states) : s(states) {
        int m = static_cast<int>(s.size());
        above.resize(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j && s[i] != s[j] && state_leq(s[i], s[j])) above[i].push_back(j);
        match_up.assign(m, -1);
        match_down.assign(m, -1);
        for (int i = 0; i < m; ++i) {
            std::vector<char> seen(m, 0);
            augment(i, seen);
        }
    }

    bool augment(int i, std::vector<char>& seen) {
        for (int j : above[i]) {
            if (seen[j]) continue;
            seen[j] = 1;
            if (match_down[j] == -1 || augment(match_down[j], seen)) {
                match_up[i] = j;
                match_down[j] = i;
                return true;
            }
        }
        return false;
    }
};

} // namespace

AntichainResult max_antichain(const PointSet& points) {
    const auto& s = points.states();
    int m = points.size();
    if (m == 0) return {0, {}};
    ComparabilityMatching mm(s);
    // Koenig: minimum vertex cover from the matching, antichain is the set
    // of points with neither side covered.
    std::vector<char> visited_left(m, 0), visited_right(m, 0);
    std::vector<int> stack;
    for (int i = 0; i < m; ++i)
        if (mm.match_up[i] == -1) {
            visited_left[i] = 1;
            stack.push_back(i);
        }
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j : mm.above[i]) {
            if (visited_right[j]) continue;
            visited_right[j] = 1;
            int next = mm.match_down[j];
            if (next != -1 && !visited_left[next]) {
                visited_left[next] = 1;
                stack.push_back(next);
            }
        }
    }
    // Cover: left vertices not visited, right vertices visited.
    std::vector<State> antichain;
    for (int i = 0; i < m; ++i)
        if (visited_left[i] && !visited_right[i]) antichain.push_back(s[i]);
    return {static_cast<int>(antichain.size()), std::move(antichain)};
}

namespace {

// Candidate pairs (x, y) with x not <= y, in lexicographic order. A
// k-pattern is a k-clique under pairwise compatibility.
struct PatternSearch {
    std::vector<std::pair<State, State>> pairs;
    int best = 0;
    std::vector<int> best_choice, current;
    int stop_at; // cut the search once this size is reached (0 = never)

    explicit PatternSearch(const PointSet& points, int stop) : stop_at(stop) {
        for (State x : points.states())
            for (State y : points.states())
                if (!state_leq(x, y)) pairs.emplace_back(x, y);
    }

    bool compatible(int a, int b) const {
        const auto& [xa, ya] = pairs[a];
        const auto& [xb, yb] = pairs[b];
        return xa != xb && ya != yb && state_leq(xa, yb) && state_leq(xb, ya);
    }

    bool dfs(std::size_t idx, int remaining_bound) {
        if (stop_at && best >= stop_at) return true;
        if (static_cast<int>(current.size()) > best) {
            best = static_cast<int>(current.size());
            best_choice = current;
            if (stop_at && best >= stop_at) return true;
        }
        if (idx == pairs.size()) return false;
        if (static_cast<int>(current.size()) + remaining_bound <= best) return false;
        for (std::size_t i = idx; i < pairs.size(); ++i) {
            bool ok = true;
            for (int c : current)
                if (!compatible(c, static_cast<int>(i))) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current.push_back(static_cast<int>(i));
            if (dfs(i + 1, static_cast<int>(pairs.size() - i - 1))) return true;
            current.pop_back();
        }
        return false;
    }
};

PatternResult max_special_pattern_impl(const PointSet& points, int stop_at) {
    // Special patterns are determined by their x-side: nonzero points with
    // complement in the set and pairwise disjoint supports.
    State full = points.dimension() == 31 ? 0x7FFFFFFFu : ((State{1} << points.dimension()) - 1);
    std::vector<State> candidates;
    for (State x : points.states())
        if (x != 0 && points.contains(full & ~x)) candidates.push_back(x);

    std::vector<State> best, current;
    std::function<bool(std::size_t, State)> dfs = [&](std::size_t idx, State used) {
        if (current.size() > best.size()) {
            best = current;
            if (stop_at && static_cast<int>(best.size()) >= stop_at) return true;
        }
        if (current.size() + (candidates.size() - idx) <= best.size()) return false;
        for (std::size_t i = idx; i < candidates.size(); ++i) {
            if (candidates[i] & used) continue;
            current.push_back(candidates[i]);
            if (dfs(i + 1, used | candidates[i])) return true;
            current.pop_back();
        }
        return false;
    };
    dfs(0, 0);

    Pattern witness;
    witness.special = true;
    for (State x : best) {
        witness.xs.push_back(x);
        witness.ys.push_back(full & ~x);
    }
    return {static_cast<int>(best.size()), std::move(witness)};
}

} // namespace

PatternResult max_pattern(const PointSet& points, bool special) {
    if (special) return max_special_pattern_impl(points, 0);
    PatternSearch search(points, 0);
    search.dfs(0, static_cast<int>(search.pairs.size()));
    Pattern witness;
    witness.special = false;
    for (int i : search.best_choice) {
        witness.xs.push_back(search.pairs[i].first);
        witness.ys.push_back(search.pairs[i].second);
    }
    return {search.best, std::move(witness)};
}

bool has_pattern_of_size(const PointSet& points, int k, bool special) {
    if (k <= 0) return true;
    if (special) return max_special_pattern_impl(points, k).size >= k;
    PatternSearch search(points, k);
    search.dfs(0, static_cast<int>(search.pairs.size()));
    return search.best >= k;
}

bool is_lattice(const PointSet& points) {
    const auto& s = points.states();
    int m = points.size();
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            // least upper bound
            bool has_lub = false, has_glb = false;
            for (int c = 0; c < m && !(has_lub && has_glb); ++c) {
                if (!has_lub && state_leq(s[a], s[c]) && state_leq(s[b], s[c])) {
                    bool minimal = true;
                    for (int d = 0; d < m; ++d)
                        if (state_leq(s[a], s[d]) && state_leq(s[b], s[d]) && !state_leq(s[c], s[d])) {
                            minimal = false;
                            break;
                        }
                    has_lub = minimal;
                }
                if (!has_glb && state_leq(s[c], s[a]) && state_leq(s[c], s[b])) {
                    bool maximal = true;
                    for (int d = 0; d < m; ++d)
                        if (state_leq(s[d], s[a]) && state_leq(s[d], s[b]) && !state_leq(s[d], s[c])) {
                            maximal = false;
                            break;
                        }
                    has_glb = maximal;
                }
            }
            if (!has_lub || !has_glb) return false;
        }
    return true;
}

long long sum_largest_binomials(int n, int l) {
    if (n < 0 || n > 62) throw InvalidInputError("sum_largest_binomials: n out of range");
    if (l < 0 || l > n + 1) throw InvalidInputError("sum_largest_binomials: l out of range");
    if (l == 0) return 0;
    // The l largest coefficients form the centered window of length l.
    int lo = (n - l + 1) / 2;
    int hi = lo + l - 1;
    long long sum = 0;
    long long c = 1; // C(n, 0)
    for (int k = 0; k <= n; ++k) {
        if (k >= lo && k <= hi) sum += c;
        c = c * (n - k) / (k + 1);
    }
    return sum;
}

long long monotone_upper_bound(int tau, int nu, int nu_star) {
    if (!(0 <= nu_star && nu_star <= nu && nu <= tau))
        throw InvalidInputError("monotone_upper_bound: need nu* <= nu <= tau");
    if (tau > 62) throw InvalidInputError("monotone_upper_bound: tau too large");
    long long bound = 1ll << tau;
    if (nu >= 1) bound = std::min(bound, 2 + sum_largest_binomials(tau, nu - 1));
    if (nu_star == 1) bound = std::min(bound, (1ll << (tau - 1)) + 1);
    return bound;
}

PointSet read_point_set(std::istream& in) {
    std::string line;
    std::vector<State> states;
    int n = -1;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        auto last = line.find_last_not_of(" \t\r");
        std::string bits = line.substr(first, last - first + 1);
        if (n == -1) n = static_cast<int>(bits.size());
        if (static_cast<int>(bits.size()) != n)
            throw InvalidInputError("point set: inconsistent bitstring lengths");
        State x = 0;
        for (int c = 0; c < n; ++c) {
            if (bits[c] == '1')
                x |= State{1} << c;
            else if (bits[c] != '0')
                throw InvalidInputError("point set: bad character in bitstring");
        }
        states.push_back(x);
    }
    if (n == -1) throw InvalidInputError("point set: empty input");
    return PointSet(n, std::move(states));
}

void write_point_set(std::ostream& out, const PointSet& points) {
    for (State x : points.states()) {
        std::string bits(points.dimension(), '0');
        for (int c = 0; c < points.dimension(); ++c)
            if ((x >> c) & 1u) bits[c] = '1';
        out << bits << "\n";
    }
}

} // namespace fixnet
