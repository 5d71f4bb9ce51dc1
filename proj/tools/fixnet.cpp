// Command-line front end: exact cycle-structure parameters, fixed-point
// analysis, bound reports and the brute-force oracle, over the text/JSON
// formats defined by the library.

#include "fixnet/constructions.hpp"
#include "fixnet/families.hpp"
#include "fixnet/oracle.hpp"
#include "fixnet/poset.hpp"
#include "fixnet/signed_digraph.hpp"
#include "fixnet/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace fixnet;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Signed files carry three fields per arc line.
bool looks_signed(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool saw_header = false;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        if (!saw_header) {
            saw_header = true;
            continue;
        }
        std::istringstream ls(line);
        int a, b, c;
        return static_cast<bool>(ls >> a >> b >> c);
    }
    return false;
}

json cycle_list_json(const Packing& p) {
    json out = json::array();
    for (const auto& c : p.cycles()) out.push_back(c.vertices());
    return out;
}

std::string cycle_list_text(const Packing& p) {
    std::string out;
    for (const auto& c : p.cycles()) {
        out += "(";
        for (std::size_t i = 0; i < c.vertices().size(); ++i) {
            if (i) out += ",";
            out += std::to_string(c.vertices()[i]);
        }
        out += ")";
    }
    return out;
}

struct GlobalOptions {
    Limits limits;
    bool as_json = false;
    std::uint32_t seed = 1;
};

int cmd_params(const GlobalOptions& opts, const std::string& file) {
    Digraph g = parse_digraph(slurp(file));
    auto fvs = min_feedback_vertex_set(g, opts.limits);
    auto packing = max_cycle_packing(g, opts.limits);
    auto special = max_special_packing(g, opts.limits);
    bool cyclic = packing.size > 0;
    int circ = cyclic ? circumference(g, opts.limits) : 0;
    if (opts.as_json) {
        json out{{"schema", 1},
                 {"n", g.vertex_count()},
                 {"arcs", g.arc_count()},
                 {"tau", {{"value", fvs.size}, {"witness", fvs.vertices}}},
                 {"nu", {{"value", packing.size}, {"witness", cycle_list_json(packing.packing)}}},
                 {"nu_star",
                  {{"value", special.size}, {"witness", cycle_list_json(special.packing)}}}};
        if (cyclic)
            out["circumference"] = circ;
        else
            out["circumference"] = nullptr;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "n=" << g.vertex_count() << " arcs=" << g.arc_count() << "\n";
        std::cout << "tau=" << fvs.size << " witness={";
        for (std::size_t i = 0; i < fvs.vertices.size(); ++i)
            std::cout << (i ? "," : "") << fvs.vertices[i];
        std::cout << "}\n";
        std::cout << "nu=" << packing.size << " packing=" << cycle_list_text(packing.packing) << "\n";
        std::cout << "nu_star=" << special.size
                  << " special_packing=" << cycle_list_text(special.packing) << "\n";
        if (cyclic)
            std::cout << "circumference=" << circ << "\n";
        else
            std::cout << "circumference=undefined (acyclic)\n";
    }
    return 0;
}

int cmd_signed_params(const GlobalOptions& opts, const std::string& file) {
    SignedDigraph sd = parse_signed_digraph(slurp(file));
    int lambda = frustration_index(sd, opts.limits);
    int tp = tau_plus(sd, opts.limits);
    int np = nu_plus(sd, opts.limits);
    int tm = tau_m(sd, opts.limits);
    int tms = tau_m_star(sd, opts.limits);
    bool balanced = is_balanced(sd);
    if (opts.as_json) {
        json out{{"schema", 1},         {"n", sd.vertex_count()}, {"lambda", lambda},
                 {"tau_plus", tp},      {"nu_plus", np},          {"tau_m", tm},
                 {"tau_m_star", tms},   {"balanced", balanced}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "n=" << sd.vertex_count() << "\n"
                  << "lambda=" << lambda << "\n"
                  << "tau_plus=" << tp << " nu_plus=" << np << "\n"
                  << "tau_m=" << tm << " tau_m_star=" << tms << "\n"
                  << "balanced=" << (balanced ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_construct(const GlobalOptions& opts, const std::string& kind, const std::string& file) {
    Digraph g = parse_digraph(slurp(file));
    BuiltNetwork built;
    if (kind == "threshold") {
        built = threshold_network(g, opts.limits);
    } else if (kind == "special-packing") {
        auto special = max_special_packing(g, opts.limits);
        built = special_packing_network(g, special.packing, opts.limits);
    } else if (kind == "short-cycle") {
        auto packing = max_cycle_packing(g, opts.limits);
        if (packing.size == 0) throw InvalidInputError("short-cycle: digraph has no cycle");
        built = short_cycle_network(g, packing.packing.cycles(), opts.limits);
    } else if (kind == "tprime") {
        int n = g.vertex_count();
        if (g != build_family("tprime", n))
            throw InvalidInputError("tprime construction expects the looped-tournament digraph");
        built = transitive_tournament_network(n, opts.limits);
    } else {
        throw InvalidInputError("unknown construction kind: " + kind);
    }
    if (opts.as_json) {
        json out{{"schema", 1},
                 {"kind", kind},
                 {"guaranteed_fixed_points", built.guaranteed_fixed_points},
                 {"verified", built.verified},
                 {"network", json::parse(format_network_json(built.net))}};
        if (built.exact_fixed_points) out["exact_fixed_points"] = *built.exact_fixed_points;
        std::cout << out.dump(2) << "\n";
    } else {
        write_network_json(std::cout, built.net);
        std::cerr << "guaranteed_fixed_points=" << built.guaranteed_fixed_points;
        if (built.exact_fixed_points) std::cerr << " exact=" << *built.exact_fixed_points;
        std::cerr << (built.verified ? " (verified)" : " (unverified: past cap)") << "\n";
    }
    return 0;
}

int cmd_fixpoints(const GlobalOptions& opts, const std::string& file) {
    BooleanNetwork f = parse_network_json(slurp(file));
    PointSet fix = fixed_points(f, opts.limits);
    // The analyses have different costs; each tier reports when it is
    // skipped rather than stalling on a huge fixed-point set.
    constexpr int kOrderCap = 512;   // chains, antichains, lattice
    constexpr int kPatternCap = 128; // pattern searches
    json out{{"schema", 1}, {"count", fix.size()}};
    std::ostringstream human;
    human << "fixed_points=" << fix.size() << "\n";
    if (fix.size() <= kOrderCap) {
        auto chain = longest_chain(fix);
        auto anti = max_antichain(fix);
        bool lattice = is_lattice(fix);
        out["longest_chain"] = chain.length;
        out["max_antichain"] = anti.size;
        out["is_lattice"] = lattice;
        human << "longest_chain=" << chain.length << "\n"
              << "max_antichain=" << anti.size << "\n"
              << "is_lattice=" << (lattice ? "yes" : "no") << "\n";
    } else {
        out["order_analysis"] = "skipped (more than 512 fixed points)";
        human << "order analysis skipped (more than 512 fixed points)\n";
    }
    if (fix.size() <= kPatternCap) {
        auto pattern = max_pattern(fix, false);
        auto special = max_pattern(fix, true);
        out["max_pattern"] = pattern.size;
        out["max_special_pattern"] = special.size;
        human << "max_pattern=" << pattern.size << "\n"
              << "max_special_pattern=" << special.size << "\n";
    } else {
        out["pattern_analysis"] = "skipped (more than 128 fixed points)";
        human << "pattern analysis skipped (more than 128 fixed points)\n";
    }
    if (fix.size() <= 256) {
        out["points"] = json::array();
        std::ostringstream points;
        write_point_set(points, fix);
        for (State x : fix.states()) {
            std::string bits(fix.dimension(), '0');
            for (int c = 0; c < fix.dimension(); ++c)
                if ((x >> c) & 1u) bits[c] = '1';
            out["points"].push_back(bits);
        }
        human << points.str();
    }
    if (opts.as_json)
        std::cout << out.dump(2) << "\n";
    else
        std::cout << human.str();
    return 0;
}

int cmd_bounds(const GlobalOptions& opts, const std::string& file) {
    Digraph g = parse_digraph(slurp(file));
    auto report = lower_bound_report(g, opts.limits);
    int tau = min_feedback_vertex_set(g, opts.limits).size;
    long long upper = monotone_upper_bound(tau, report.nu, report.nu_star);
    if (opts.as_json) {
        json out{{"schema", 1},
                 {"parameters",
                  {{"tau", tau},
                   {"nu", report.nu},
                   {"nu_star", report.nu_star},
                   {"circumference", report.circumference}}},
                 {"lower_bounds",
                  {{"threshold", report.from_packing},
                   {"special_packing", report.from_special},
                   {"short_cycles", report.from_short_cycles},
                   {"best", report.best},
                   {"best_construction", report.best_construction}}},
                 {"upper_bound", upper}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "tau=" << tau << " nu=" << report.nu << " nu_star=" << report.nu_star
                  << " c=" << report.circumference << "\n"
                  << "lower: threshold=" << report.from_packing
                  << " special=" << report.from_special
                  << " short-cycles=" << report.from_short_cycles << " best=" << report.best << " ("
                  << report.best_construction << ")\n"
                  << "upper: " << upper << "\n";
    }
    return 0;
}

int cmd_oracle(const GlobalOptions& opts, const std::string& file) {
    std::string text = slurp(file);
    OracleOptions oracle_opts;
    oracle_opts.limits = opts.limits;
    if (looks_signed(text)) {
        SignedDigraph sd = parse_signed_digraph(text);
        auto r = phi_exact(sd, oracle_opts);
        if (opts.as_json) {
            json out{{"schema", 1},
                     {"phi", r.value},
                     {"candidates", r.candidates},
                     {"witness", json::parse(format_network_json(r.witness))}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "phi=" << r.value << " candidates=" << r.candidates << "\n";
            write_network_json(std::cout, r.witness);
        }
    } else {
        Digraph g = parse_digraph(text);
        auto r = phi_m_exact(g, oracle_opts);
        if (opts.as_json) {
            json out{{"schema", 1},
                     {"phi_m", r.value},
                     {"candidates", r.candidates},
                     {"witness", json::parse(format_network_json(r.witness))}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "phi_m=" << r.value << " candidates=" << r.candidates << "\n";
            write_network_json(std::cout, r.witness);
        }
    }
    return 0;
}

int cmd_verify(const GlobalOptions& opts, const std::string& file) {
    std::string text = slurp(file);
    VerifyOptions vo;
    vo.limits = opts.limits;
    vo.seed = opts.seed;
    VerifyReport report = looks_signed(text) ? verify_theorems(parse_signed_digraph(text), vo)
                                             : verify_theorems(parse_digraph(text), vo);
    if (opts.as_json) {
        std::cout << report.to_json().dump(2) << "\n";
    } else {
        for (const auto& line : report.lines) {
            const char* status = line.status == CheckLine::Status::Pass   ? "PASS"
                                 : line.status == CheckLine::Status::Fail ? "FAIL"
                                                                          : "SKIP";
            std::cout << status << " " << line.id << ": " << line.description;
            if (!line.lhs.empty()) std::cout << " [" << line.lhs << " vs " << line.rhs << "]";
            if (!line.note.empty()) std::cout << " (" << line.note << ")";
            std::cout << "\n";
        }
    }
    return report.all_passed() ? 0 : 1;
}

int cmd_generate(const std::string& family, int n) {
    write_digraph(std::cout, build_family(family, n));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cycle-structure and fixed-point analysis for Boolean networks"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalOptions opts;
    int cap = 0, cycle_cap = 0;
    app.add_option("--cap", cap, "state-enumeration / feedback search vertex cap");
    app.add_option("--cycle-cap", cycle_cap, "elementary cycle enumeration cap");
    app.add_flag("--json", opts.as_json, "machine-readable output");
    app.add_option("--seed", opts.seed, "seed for randomized sweeps");

    std::string file = "-", kind, family;
    int n = 0;

    auto* params = app.add_subcommand("params", "tau, nu, nu*, circumference with witnesses");
    params->add_option("file", file)->required();
    auto* signed_params = app.add_subcommand("signed-params", "lambda, tau+, nu+, tau_m, tau_m*");
    signed_params->add_option("file", file)->required();
    auto* construct = app.add_subcommand("construct", "build a network on the digraph");
    construct->add_option("kind", kind, "threshold | special-packing | short-cycle | tprime")
        ->required();
    construct->add_option("file", file)->required();
    auto* fixpoints_cmd = app.add_subcommand("fixpoints", "enumerate fixed points of a network");
    fixpoints_cmd->add_option("file", file)->required();
    auto* bounds = app.add_subcommand("bounds", "lower/upper bound report");
    bounds->add_option("file", file)->required();
    auto* oracle_cmd = app.add_subcommand("oracle", "exact maximum fixed-point count");
    oracle_cmd->add_option("file", file)->required();
    auto* verify = app.add_subcommand("verify", "run every applicable theorem check");
    verify->add_option("file", file)->required();
    auto* generate = app.add_subcommand("generate", "emit a family digraph");
    generate->add_option("family", family)->required();
    generate->add_option("n", n)->required();

    CLI11_PARSE(app, argc, argv);

    if (cap > 0) {
        opts.limits.max_enum_vertices = cap;
        opts.limits.construction_verify_vertices = cap;
        opts.limits.max_switch_vertices = cap;
    }
    if (cycle_cap > 0) opts.limits.max_cycle_count = cycle_cap;

    auto report_error = [](const char* type, const char* message) {
        json err{{"schema", 1}, {"error", {{"type", type}, {"message", message}}}};
        std::cerr << err.dump() << "\n";
        return 2;
    };
    try {
        if (params->parsed()) return cmd_params(opts, file);
        if (signed_params->parsed()) return cmd_signed_params(opts, file);
        if (construct->parsed()) return cmd_construct(opts, kind, file);
        if (fixpoints_cmd->parsed()) return cmd_fixpoints(opts, file);
        if (bounds->parsed()) return cmd_bounds(opts, file);
        if (oracle_cmd->parsed()) return cmd_oracle(opts, file);
        if (verify->parsed()) return cmd_verify(opts, file);
        if (generate->parsed()) return cmd_generate(family, n);
    } catch (const CapExceededError& e) {
        return report_error("cap-exceeded", e.what());
    } catch (const InessentialInputError& e) {
        return report_error("inessential-input", e.what());
    } catch (const InvalidInputError& e) {
        return report_error("invalid-input", e.what());
    } catch (const PostconditionError& e) {
        return report_error("postcondition", e.what());
    } catch (const std::exception& e) {
        return report_error("error", e.what());
    }
    return 0;
}
