#include "fixnet/verify.hpp"

#include "fixnet/constructions.hpp"
#include "fixnet/poset.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace fixnet {

bool VerifyReport::all_passed() const {
    for (const auto& line : lines)
        if (line.status == CheckLine::Status::Fail) return false;
    return true;
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& line : lines) {
        const char* status = line.status == CheckLine::Status::Pass   ? "pass"
                             : line.status == CheckLine::Status::Fail ? "fail"
                                                                      : "skip";
        nlohmann::json entry{{"id", line.id},
                             {"description", line.description},
                             {"status", status}};
        if (!line.lhs.empty()) entry["lhs"] = line.lhs;
        if (!line.rhs.empty()) entry["rhs"] = line.rhs;
        if (!line.note.empty()) entry["note"] = line.note;
        checks.push_back(entry);
    }
    return nlohmann::json{{"schema", 1}, {"checks", checks}, {"all_passed", all_passed()}};
}

namespace {

struct Reporter {
    VerifyReport report;

    void bound(const std::string& id, const std::string& description, long long lhs, long long rhs,
               bool pass_if_leq = true) {
        CheckLine line;
        line.id = id;
        line.description = description;
        line.lhs = std::to_string(lhs);
        line.rhs = std::to_string(rhs);
        bool ok = pass_if_leq ? lhs <= rhs : lhs >= rhs;
        line.status = ok ? CheckLine::Status::Pass : CheckLine::Status::Fail;
        report.lines.push_back(std::move(line));
    }

    void predicate(const std::string& id, const std::string& description, bool ok,
                   const std::string& note = "") {
        CheckLine line;
        line.id = id;
        line.description = description;
        line.status = ok ? CheckLine::Status::Pass : CheckLine::Status::Fail;
        line.note = note;
        report.lines.push_back(std::move(line));
    }

    void skip(const std::string& id, const std::string& description, const std::string& why) {
        CheckLine line;
        line.id = id;
        line.description = description;
        line.status = CheckLine::Status::Skip;
        line.note = why;
        report.lines.push_back(std::move(line));
    }
};

// Four structural constraints on the fixed points of a monotone network,
// projected onto a minimum feedback vertex set of its interaction graph.
struct FourConstraintOutcome {
    bool lattice = false, chain = false, pattern = false, special = false;
    bool applicable = false;
};

FourConstraintOutcome four_constraints(const BooleanNetwork& f, const Limits& lim) {
    FourConstraintOutcome out;
    Digraph g = interaction_graph(f);
    auto fvs = min_feedback_vertex_set(g, lim);
    int nu = max_cycle_packing(g, lim).size;
    int nu_star = max_special_packing(g, lim).size;
    auto fix = fixed_points(f, lim);
    auto projected = project_onto(fix, fvs.vertices, f, true);
    out.applicable = true;
    out.lattice = is_lattice(projected);
    out.chain = longest_chain(projected).length <= nu + 1;
    out.pattern = !has_pattern_of_size(projected, nu + 1, false);
    out.special = !has_pattern_of_size(projected, nu_star + 1, true);
    return out;
}

} // namespace

VerifyReport verify_theorems(const Digraph& g, const VerifyOptions& opts) {
    Reporter r;
    const auto& lim = opts.limits;

    int tau = min_feedback_vertex_set(g, lim).size;
    int nu = max_cycle_packing(g, lim).size;
    int nu_star = max_special_packing(g, lim).size;
    bool cyclic = nu > 0;
    int circ = cyclic ? circumference(g, lim) : 0;
    {
        CheckLine params;
        params.id = "parameters";
        params.description = "tau=" + std::to_string(tau) + " nu=" + std::to_string(nu) +
                             " nu*=" + std::to_string(nu_star) +
                             (cyclic ? " c=" + std::to_string(circ) : " (acyclic)");
        params.status = CheckLine::Status::Pass;
        r.report.lines.push_back(params);
    }

    long long phi_m = -1;
    OracleResult oracle;
    std::string oracle_note;
    if (opts.run_oracle) {
        try {
            OracleOptions oo;
            oo.limits = lim;
            oracle = phi_m_exact(g, oo);
            phi_m = oracle.value;
        } catch (const CapExceededError& e) {
            oracle_note = e.what();
        }
    } else {
        oracle_note = "oracle disabled";
    }

    if (phi_m >= 0) {
        r.bound("feedback-bound", "phi_m <= 2^tau", phi_m, 1ll << tau);
        if (nu >= 1)
            r.bound("chain-bound", "phi_m <= 2 + sum of nu-1 largest C(tau, .)", phi_m,
                    2 + sum_largest_binomials(tau, nu - 1));
        else
            r.skip("chain-bound", "phi_m <= 2 + sum of nu-1 largest C(tau, .)",
                   "acyclic (empty coefficient range)");
        if (nu <= 1)
            r.bound("nu-at-most-1", "nu <= 1 forces phi_m <= 2", phi_m, 2);
        else
            r.skip("nu-at-most-1", "nu <= 1 forces phi_m <= 2", "nu > 1");
        if (nu_star == 1)
            r.bound("special-1-bound", "nu* = 1 forces phi_m <= 2^{tau-1}+1", phi_m,
                    (1ll << (tau - 1)) + 1);
        else
            r.skip("special-1-bound", "nu* = 1 forces phi_m <= 2^{tau-1}+1", "nu* != 1");
        r.bound("lower-threshold", "nu+1 <= phi_m", nu + 1, phi_m, true);
        r.bound("lower-special", "2^{nu*} <= phi_m", 1ll << nu_star, phi_m, true);
        if (cyclic) {
            long long power = 1;
            for (int i = 0; i < circ; ++i) power *= 3;
            r.bound("lower-short-cycles", "2^{floor(nu/3^c)} <= phi_m", 1ll << (nu / power), phi_m,
                    true);
        } else {
            r.skip("lower-short-cycles", "2^{floor(nu/3^c)} <= phi_m", "acyclic");
        }
        r.predicate("characterization", "phi_m = 2^tau iff nu* = tau",
                    (phi_m == (1ll << tau)) == (nu_star == tau),
                    "phi_m=" + std::to_string(phi_m) + " tau=" + std::to_string(tau) +
                        " nu*=" + std::to_string(nu_star));
        if (nu <= 2)
            r.bound("nu-at-most-2", "nu <= 2 forces phi_m <= 4", phi_m, 4);
        else
            r.skip("nu-at-most-2", "nu <= 2 forces phi_m <= 4", "nu > 2");
        {
            auto out = four_constraints(oracle.witness, lim);
            r.predicate("witness-lattice", "maximizer: projected fixed points form a lattice",
                        out.lattice);
            r.predicate("witness-chain", "maximizer: no chain of size nu+2", out.chain);
            r.predicate("witness-pattern", "maximizer: no (nu+1)-pattern", out.pattern);
            r.predicate("witness-special-pattern", "maximizer: no special (nu*+1)-pattern",
                        out.special);
        }
    } else {
        for (const char* id : {"feedback-bound", "chain-bound", "nu-at-most-1", "special-1-bound",
                               "lower-threshold", "lower-special", "lower-short-cycles",
                               "characterization", "nu-at-most-2", "witness-lattice",
                               "witness-chain", "witness-pattern", "witness-special-pattern"})
            r.skip(id, "oracle-based check", oracle_note);
    }

    // Constructive lower bounds hold regardless of the oracle.
    if (g.vertex_count() > 0 && g.vertex_count() <= lim.construction_verify_vertices) {
        auto built = threshold_network(g, lim);
        r.bound("construction-threshold", "threshold network reaches nu+1 fixed points",
                nu + 1, built.exact_fixed_points.value_or(built.guaranteed_fixed_points), true);
        auto special = max_special_packing(g, lim);
        auto built2 = special_packing_network(g, special.packing, lim);
        r.bound("construction-special", "special-packing network reaches 2^{nu*} fixed points",
                1ll << nu_star, built2.exact_fixed_points.value_or(built2.guaranteed_fixed_points),
                true);
    } else {
        r.skip("construction-threshold", "threshold network reaches nu+1 fixed points",
               "outside verification cap");
        r.skip("construction-special", "special-packing network reaches 2^{nu*} fixed points",
               "outside verification cap");
    }

    // Random monotone networks on g: the four constraints plus the
    // composite upper bound.
    if (opts.random_monotone_samples > 0) {
        bool feasible = true;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.in_degree(v) > 5) feasible = false;
        if (!feasible || g.vertex_count() > 16) {
            r.skip("random-monotone-sweep", "four-constraint sweep on random monotone networks",
                   "in-degree above 5 or too many vertices");
        } else {
            std::mt19937 rng(opts.seed);
            std::vector<std::vector<std::vector<std::uint8_t>>> pools(g.vertex_count());
            for (int v = 0; v < g.vertex_count(); ++v)
                pools[v] = enumerate_monotone_functions(g.in_degree(v), true);
            int violations = 0;
            long long ub = monotone_upper_bound(tau, nu, nu_star);
            for (int s = 0; s < opts.random_monotone_samples; ++s) {
                std::vector<NodeFunction> nodes(g.vertex_count());
                for (int v = 0; v < g.vertex_count(); ++v) {
                    auto in = g.in_neighbors(v);
                    nodes[v].inputs.assign(in.begin(), in.end());
                    nodes[v].table = pools[v][rng() % pools[v].size()];
                }
                BooleanNetwork f(g.vertex_count(), std::move(nodes));
                auto out = four_constraints(f, lim);
                if (!(out.lattice && out.chain && out.pattern && out.special)) ++violations;
                if (count_fixed_points(f, lim) > ub) ++violations;
            }
            r.bound("random-monotone-sweep",
                    "four-constraint sweep on " + std::to_string(opts.random_monotone_samples) +
                        " random monotone networks (violations)",
                    violations, 0);
        }
    }
    return r.report;
}

VerifyReport verify_theorems(const SignedDigraph& sd, const VerifyOptions& opts) {
    Reporter r;
    const auto& lim = opts.limits;

    int tau = min_feedback_vertex_set(sd.base(), lim).size;
    int tp = tau_plus(sd, lim);
    int np = nu_plus(sd, lim);
    int tm = tau_m(sd, lim);
    int tms = tau_m_star(sd, lim);
    int lambda = frustration_index(sd, lim);
    bool balanced = is_balanced(sd);
    {
        CheckLine params;
        params.id = "parameters";
        params.description = "tau=" + std::to_string(tau) + " tau+=" + std::to_string(tp) +
                             " nu+=" + std::to_string(np) + " tau_m=" + std::to_string(tm) +
                             " tau_m*=" + std::to_string(tms) + " lambda=" + std::to_string(lambda) +
                             (balanced ? " balanced" : " unbalanced");
        params.status = CheckLine::Status::Pass;
        r.report.lines.push_back(params);
    }

    r.predicate("parameter-order", "nu+ <= tau+ <= tau <= tau_m* <= tau_m and tau_m* <= tau+lambda",
                np <= tp && tp <= tau && tau <= tms && tms <= tm && tms <= tau + lambda);
    r.predicate("balance-frustration", "balanced iff lambda = 0", balanced == (lambda == 0));

    long long phi = -1;
    std::string oracle_note;
    try {
        OracleOptions oo;
        oo.limits = lim;
        phi = phi_exact(sd, oo).value;
    } catch (const CapExceededError& e) {
        oracle_note = e.what();
    } catch (const InvalidInputError& e) {
        oracle_note = e.what();
    }

    if (phi >= 0) {
        r.bound("positive-feedback-bound", "phi <= 2^{tau+}", phi, 1ll << tp);
        r.bound("signed-binomial-bound", "phi <= sum of nu+ +1 largest C(tau_m*, .)", phi,
                sum_largest_binomials(tms, std::min(np + 1, tms + 1)));
        if (balanced) {
            long long phim = -1;
            try {
                OracleOptions oo;
                oo.limits = lim;
                phim = phi_m_exact(sd.base(), oo).value;
            } catch (const CapExceededError&) {
            }
            if (phim >= 0)
                r.predicate("balanced-equality", "balanced implies phi = phi_m of the base digraph",
                            phi == phim,
                            "phi=" + std::to_string(phi) + " phi_m=" + std::to_string(phim));
            else
                r.skip("balanced-equality", "balanced implies phi = phi_m of the base digraph",
                       "monotone oracle infeasible");
        } else {
            r.skip("balanced-equality", "balanced implies phi = phi_m of the base digraph",
                   "not balanced");
        }
    } else {
        for (const char* id : {"positive-feedback-bound", "signed-binomial-bound", "balanced-equality"})
            r.skip(id, "oracle-based check", oracle_note);
    }

    // Switch invariance spot-checks.
    {
        std::mt19937 rng(opts.seed);
        bool ok = true;
        Limits cycle_lim = lim;
        for (int trial = 0; trial < 8 && ok; ++trial) {
            std::vector<int> I;
            for (int v = 0; v < sd.vertex_count(); ++v)
                if (rng() & 1u) I.push_back(v);
            auto switched = switch_signs(sd, I);
            if (switch_signs(switched, I) != sd) ok = false;
            if (tau_plus(switched, cycle_lim) != tp) ok = false;
            if (nu_plus(switched, cycle_lim) != np) ok = false;
            if (frustration_index(switched, cycle_lim) != lambda) ok = false;
            for (const auto& c : enumerate_cycles(sd.base(), cycle_lim))
                if (cycle_sign(sd, c) != cycle_sign(switched, c)) ok = false;
        }
        r.predicate("switch-invariance",
                    "switch involution; cycle signs, tau+, nu+, lambda invariant", ok);
    }
    return r.report;
}

} // namespace fixnet
