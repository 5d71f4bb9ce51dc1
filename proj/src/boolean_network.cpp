#include "fixnet/boolean_network.hpp"

#include "fixnet/poset.hpp"
#include "fixnet/signed_digraph.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

namespace fixnet {

BooleanNetwork::BooleanNetwork(int n, std::vector<NodeFunction> nodes)
    : n_(n), nodes_(std::move(nodes)) {
    if (n < 0 || static_cast<int>(nodes_.size()) != n)
        throw InvalidInputError("network: node list must have n entries");
    if (n > 31) throw InvalidInputError("network: at most 31 components supported");
    for (int v = 0; v < n_; ++v) {
        auto& node = nodes_[v];
        int d = static_cast<int>(node.inputs.size());
        if (d > 25) throw InvalidInputError("network: in-degree too large");
        std::vector<int> sorted = node.inputs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidInputError("network: repeated input");
        for (int u : node.inputs)
            if (u < 0 || u >= n_) throw InvalidInputError("network: input out of range");
        if (node.table.size() != (std::size_t{1} << d))
            throw InvalidInputError("network: table size must be 2^in-degree");
        for (auto bit : node.table)
            if (bit > 1) throw InvalidInputError("network: table entries must be 0/1");
    }
}

bool BooleanNetwork::eval_component(int v, State x) const {
    const auto& node = nodes_[v];
    std::size_t idx = 0;
    for (std::size_t j = 0; j < node.inputs.size(); ++j)
        idx |= static_cast<std::size_t>((x >> node.inputs[j]) & 1u) << j;
    return node.table[idx] != 0;
}

State BooleanNetwork::evaluate(State x) const {
    State y = 0;
    for (int v = 0; v < n_; ++v)
        if (eval_component(v, x)) y |= State{1} << v;
    return y;
}

Digraph BooleanNetwork::declared_graph() const {
    std::vector<Arc> arcs;
    for (int v = 0; v < n_; ++v)
        for (int u : nodes_[v].inputs) arcs.emplace_back(u, v);
    return Digraph(n_, std::move(arcs));
}

namespace {

constexpr std::uint64_t kVarPattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

// Bits of variable u across the 64 states base..base+63.
inline std::uint64_t var_column(int u, State base) {
    if (u < 6) return kVarPattern[u];
    return ((base >> u) & 1u) ? ~0ull : 0ull;
}

// Output column of one component over a 64-state block.
std::uint64_t component_column(const NodeFunction& node, State base) {
    int d = static_cast<int>(node.inputs.size());
    if (d <= 6) {
        std::uint64_t out = 0;
        for (std::size_t m = 0; m < node.table.size(); ++m) {
            if (!node.table[m]) continue;
            std::uint64_t term = ~0ull;
            for (int j = 0; j < d; ++j) {
                std::uint64_t col = var_column(node.inputs[j], base);
                term &= ((m >> j) & 1) ? col : ~col;
            }
            out |= term;
        }
        return out;
    }
    std::uint64_t out = 0;
    for (int s = 0; s < 64; ++s) {
        State x = base + static_cast<State>(s);
        std::size_t idx = 0;
        for (int j = 0; j < d; ++j) idx |= static_cast<std::size_t>((x >> node.inputs[j]) & 1u) << j;
        if (node.table[idx]) out |= 1ull << s;
    }
    return out;
}

template <typename Sink>
void scan_fixed_points(const BooleanNetwork& f, const Limits& lim, Sink&& sink) {
    int n = f.size();
    if (n > lim.max_enum_vertices)
        throw CapExceededError("fixed_points: " + std::to_string(n) + " components exceeds cap " +
                               std::to_string(lim.max_enum_vertices));
    std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t base = 0; base < total; base += 64) {
        std::uint64_t ok = total - base >= 64 ? ~0ull : (1ull << (total - base)) - 1;
        for (int v = 0; v < n && ok; ++v) {
            std::uint64_t out = component_column(f.node(v), static_cast<State>(base));
            ok &= ~(out ^ var_column(v, static_cast<State>(base)));
        }
        while (ok) {
            int s = std::countr_zero(ok);
            ok &= ok - 1;
            sink(static_cast<State>(base + s));
        }
    }
}

} // namespace

PointSet fixed_points(const BooleanNetwork& f, const Limits& lim) {
    std::vector<State> fixed;
    scan_fixed_points(f, lim, [&](State x) { fixed.push_back(x); });
    return PointSet(f.size(), std::move(fixed));
}

long long count_fixed_points(const BooleanNetwork& f, const Limits& lim) {
    long long count = 0;
    scan_fixed_points(f, lim, [&](State) { ++count; });
    return count;
}

namespace {

// -1 uniformly antitone, +1 uniformly isotone, 0 mixed, 2 inessential.
int input_sign(const NodeFunction& node, int j) {
    bool up = false, down = false;
    std::size_t bit = std::size_t{1} << j;
    for (std::size_t m = 0; m < node.table.size(); ++m) {
        if (m & bit) continue;
        int lo = node.table[m], hi = node.table[m | bit];
        if (lo < hi) up = true;
        if (lo > hi) down = true;
    }
    if (!up && !down) return 2;
    if (up && down) return 0;
    return up ? 1 : -1;
}

} // namespace

Digraph interaction_graph(const BooleanNetwork& f) {
    std::vector<Arc> arcs;
    for (int v = 0; v < f.size(); ++v) {
        const auto& node = f.node(v);
        for (std::size_t j = 0; j < node.inputs.size(); ++j)
            if (input_sign(node, static_cast<int>(j)) != 2) arcs.emplace_back(node.inputs[j], v);
    }
    return Digraph(f.size(), std::move(arcs));
}

SignedDigraph signed_interaction_graph(const BooleanNetwork& f) {
    std::vector<Arc> arcs;
    std::vector<int> signs;
    for (int v = 0; v < f.size(); ++v) {
        const auto& node = f.node(v);
        for (std::size_t j = 0; j < node.inputs.size(); ++j) {
            int s = input_sign(node, static_cast<int>(j));
            if (s == 2) continue;
            arcs.emplace_back(node.inputs[j], v);
            signs.push_back(s);
        }
    }
    // Arc construction sorts; re-align signs through an index sort.
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
    return SignedDigraph(Digraph(f.size(), sorted_arcs), sorted_signs);
}

void require_essential_inputs(const BooleanNetwork& f) {
    for (int v = 0; v < f.size(); ++v) {
        const auto& node = f.node(v);
        for (std::size_t j = 0; j < node.inputs.size(); ++j)
            if (input_sign(node, static_cast<int>(j)) == 2)
                throw InessentialInputError("component " + std::to_string(v) +
                                            " declares inessential input " +
                                            std::to_string(node.inputs[j]));
    }
}

bool is_component_monotone(const BooleanNetwork& f, int v) {
    const auto& node = f.node(v);
    for (std::size_t j = 0; j < node.inputs.size(); ++j) {
        int s = input_sign(node, static_cast<int>(j));
        if (s == 0 || s == -1) return false;
    }
    return true;
}

bool is_monotone(const BooleanNetwork& f) {
    for (int v = 0; v < f.size(); ++v)
        if (!is_component_monotone(f, v)) return false;
    return true;
}

std::vector<GateKind> classify_and_or(const BooleanNetwork& f) {
    std::vector<GateKind> kinds;
    kinds.reserve(f.size());
    for (int v = 0; v < f.size(); ++v) {
        const auto& t = f.node(v).table;
        bool is_and = true, is_or = true;
        for (std::size_t m = 0; m < t.size(); ++m) {
            bool all_ones = m + 1 == t.size();
            bool any_one = m != 0;
            if (t[m] != (all_ones ? 1 : 0)) is_and = false;
            if (t[m] != (any_one ? 1 : 0)) is_or = false;
        }
        kinds.push_back(is_and ? GateKind::AndGate : is_or ? GateKind::OrGate : GateKind::Neither);
    }
    return kinds;
}

bool is_and_or_network(const BooleanNetwork& f) {
    for (auto kind : classify_and_or(f))
        if (kind == GateKind::Neither) return false;
    return true;
}

// --- JSON -----------------------------------------------------------------

BooleanNetwork read_network_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError(std::string("network json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("vertices"))
        throw InvalidInputError("network json: expected {\"n\":..., \"vertices\":[...]}");
    int n = j.at("n").get<int>();
    std::vector<NodeFunction> nodes;
    for (const auto& entry : j.at("vertices")) {
        NodeFunction node;
        node.inputs = entry.at("inputs").get<std::vector<int>>();
        std::string bits = entry.at("table").get<std::string>();
        for (char c : bits) {
            if (c != '0' && c != '1') throw InvalidInputError("network json: table must be a bitstring");
            node.table.push_back(c == '1');
        }
        nodes.push_back(std::move(node));
    }
    return BooleanNetwork(n, std::move(nodes));
}

BooleanNetwork parse_network_json(const std::string& text) {
    std::istringstream in(text);
    return read_network_json(in);
}

void write_network_json(std::ostream& out, const BooleanNetwork& f) {
    nlohmann::json vertices = nlohmann::json::array();
    for (int v = 0; v < f.size(); ++v) {
        const auto& node = f.node(v);
        std::string bits;
        for (auto b : node.table) bits.push_back(b ? '1' : '0');
        vertices.push_back({{"inputs", node.inputs}, {"table", bits}});
    }
    nlohmann::json j{{"n", f.size()}, {"vertices", vertices}};
    out << j.dump(2) << "\n";
}

std::string format_network_json(const BooleanNetwork& f) {
    std::ostringstream out;
    write_network_json(out, f);
    return out.str();
}

} // namespace fixnet
