#include "graphpart/cli.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "graphpart/certificate.hpp"
#include "graphpart/errors.hpp"
#include "graphpart/exclusive.hpp"
#include "graphpart/generators.hpp"
#include "graphpart/graph.hpp"
#include "graphpart/inductive.hpp"
#include "graphpart/io.hpp"
#include "graphpart/monopolar.hpp"
#include "graphpart/oracle.hpp"
#include "graphpart/property_spec.hpp"
#include "graphpart/subcoloring.hpp"
#include "graphpart/total.hpp"

namespace graphpart {

namespace {

struct RunConfig {
    std::string problem;
    int k = -1;
    std::string input;
    std::string certificate; // output for recognize/gen/oracle, input for verify
    std::string spec_a;
    std::string spec_b;
    int exclusivity = 0; // 0 = derive from the specs
    long long budget = kDefaultXpBudget;
    std::string order = "degree";
    bool stats = false;

    std::string kind; // gen only
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 1;
    double a_fraction = 0.3;
    int a_size = -1;
    std::string output;
};

int require_k(const RunConfig& cfg) {
    if (cfg.k < 0)
        throw ConfigError("--k is required (>= 0) for problem " + cfg.problem);
    return cfg.k;
}

PropertySpec require_spec(const std::string& text, const char* flag) {
    if (text.empty()) throw ConfigError(std::string(flag) + " is required for this problem");
    return parse_property_spec(text);
}

using StatLines = std::vector<std::pair<std::string, long long>>;

void append_rules(StatLines& kv, const std::map<std::string, long long>& rules) {
    for (const auto& [name, count] : rules) kv.emplace_back("rule." + name, count);
}

int do_recognize(const RunConfig& cfg) {
    Graph g = parse_graph_file(cfg.input);
    std::optional<Bipartition> cert;
    StatLines kv;

    if (cfg.problem == "monopolar") {
        int k = require_k(cfg);
        MonoStats st;
        if (cfg.order == "input") {
            MonopolarEngine engine(&st);
            cert = recognize_inductively(g, k, engine, OrderMode::input, &st.driver);
        } else {
            cert = recognize_monopolar(g, k, &st);
        }
        kv = {{"steps", st.steps},
              {"nodes", st.nodes},
              {"leaves", st.leaves},
              {"exhausted_leaves", st.exhausted_leaves},
              {"depth", st.max_branchings_per_path + 1},
              {"max_promotions_per_path", st.max_promotions_per_path},
              {"max_demotions_per_path", st.max_demotions_per_path},
              {"cap_violations", st.cap_violations},
              {"degree_bound_violations", st.driver.degree_bound_violations}};
        append_rules(kv, st.rule_applications);
    } else if (cfg.problem == "subcoloring-ka") {
        int k = require_k(cfg);
        SubStats st;
        cert = recognize_subcoloring_ka(g, k, &st);
        kv = {{"steps", st.steps},
              {"nodes", st.nodes},
              {"leaves", st.leaves},
              {"exhausted_leaves", st.exhausted_leaves},
              {"stripped_vertices", st.stripped_vertices},
              {"max_initial_constraints", st.max_initial_constraints},
              {"initial_cap_violations", st.initial_cap_violations},
              {"max_a_branchings_per_path", st.max_a_branchings_per_path},
              {"max_b_branchings_per_path", st.max_b_branchings_per_path},
              {"switch_cap_violations", st.switch_cap_violations},
              {"degree_bound_violations", st.driver.degree_bound_violations}};
        append_rules(kv, st.rule_applications);
    } else if (cfg.problem == "subcoloring-total") {
        int k = require_k(cfg);
        TotalStats st;
        cert = recognize_subcoloring_total(g, k, &st);
        kv = {{"nodes", st.nodes},
              {"leaves", st.leaves},
              {"exhausted_leaves", st.exhausted_leaves},
              {"satisfiable_leaves", st.satisfiable_leaves},
              {"max_dummy_branches", st.max_dummy_branches},
              {"dummy_rule_violations", st.dummy_rule_violations},
              {"recount_failures", st.recount_failures}};
        append_rules(kv, st.rule_applications);
    } else if (cfg.problem == "generic-exclusive") {
        PropertySpec sa = require_spec(cfg.spec_a, "--spec-a");
        PropertySpec sb = require_spec(cfg.spec_b, "--spec-b");
        int d = cfg.exclusivity > 0 ? cfg.exclusivity : derive_exclusivity(sa, sb);
        DriverStats ds;
        cert = recognize_exclusive(g, sa, sb, d, &ds, cfg.budget);
        kv = {{"exclusivity", d},
              {"failed_prefix", ds.failed_prefix},
              {"degree_bound_violations", ds.degree_bound_violations}};
    } else { // bounded-a
        int k = require_k(cfg);
        PropertySpec sa = require_spec(cfg.spec_a, "--spec-a");
        PropertySpec sb = require_spec(cfg.spec_b, "--spec-b");
        cert = recognize_bounded_a(g, k, sa, sb);
    }

    std::cout << (cert ? "YES" : "NO") << '\n';
    if (cfg.stats)
        for (const auto& [key, value] : kv) std::cout << key << '=' << value << '\n';
    if (cert && !cfg.certificate.empty()) write_certificate(*cert, cfg.certificate);
    return cert ? 0 : 1;
}

VerifyResult verify_generic(const Graph& g, const Bipartition& cert, const RunConfig& cfg) {
    if (static_cast<int>(cert.side_of.size()) != g.order())
        return {false, "certificate covers " + std::to_string(cert.side_of.size()) +
                           " vertices, graph has " + std::to_string(g.order())};
    PropertySpec sa = require_spec(cfg.spec_a, "--spec-a");
    PropertySpec sb = require_spec(cfg.spec_b, "--spec-b");
    auto av = cert.a_vertices();
    if (cfg.problem == "bounded-a" && static_cast<int>(av.size()) > require_k(cfg))
        return {false, "A side larger than k"};
    if (!sa.holds(g, av)) return {false, "A side does not satisfy " + sa.name};
    if (!sb.holds(g, cert.b_vertices())) return {false, "B side does not satisfy " + sb.name};
    return {};
}

int do_verify(const RunConfig& cfg) {
    Graph g = parse_graph_file(cfg.input);
    Bipartition cert = parse_certificate(cfg.certificate);
    VerifyResult vr;
    if (cfg.problem == "monopolar")
        vr = verify_certificate(g, cert, Problem::monopolar, require_k(cfg), BoundMode::a_side);
    else if (cfg.problem == "subcoloring-ka")
        vr = verify_certificate(g, cert, Problem::subcoloring, require_k(cfg), BoundMode::a_side);
    else if (cfg.problem == "subcoloring-total")
        vr = verify_certificate(g, cert, Problem::subcoloring, require_k(cfg), BoundMode::total);
    else
        vr = verify_generic(g, cert, cfg);
    std::cout << (vr.ok ? "VALID" : "INVALID") << '\n';
    if (!vr.ok) std::cerr << vr.reason << '\n';
    return vr.ok ? 0 : 1;
}

int do_oracle(const RunConfig& cfg) {
    Graph g = parse_graph_file(cfg.input);
    std::optional<Bipartition> got;
    if (cfg.problem == "monopolar")
        got = brute_monopolar(g, require_k(cfg));
    else if (cfg.problem == "subcoloring-ka")
        got = brute_subcoloring(g, require_k(cfg), BoundMode::a_side);
    else if (cfg.problem == "subcoloring-total")
        got = brute_subcoloring(g, require_k(cfg), BoundMode::total);
    else if (cfg.problem == "generic-exclusive")
        got = brute_pi_partition(g, require_spec(cfg.spec_a, "--spec-a"),
                                 require_spec(cfg.spec_b, "--spec-b"));
    else { // bounded-a: cap the A-side spec by order <= k
        int k = require_k(cfg);
        PropertySpec sa = require_spec(cfg.spec_a, "--spec-a");
        PropertySpec capped = sa;
        capped.name = sa.name + "|order<=" + std::to_string(k);
        capped.membership = [inner = sa.membership, k](const Graph& h) {
            return h.order() <= k && inner(h);
        };
        got = brute_pi_partition(g, capped, require_spec(cfg.spec_b, "--spec-b"));
    }
    std::cout << (got ? "YES" : "NO") << '\n';
    if (got && !cfg.certificate.empty()) write_certificate(*got, cfg.certificate);
    return got ? 0 : 1;
}

int do_gen(const RunConfig& cfg) {
    if (cfg.p < 0.0 || cfg.p > 1.0) throw ConfigError("--p must lie in [0, 1]");
    if (cfg.n < 0) throw ConfigError("--n must be nonnegative");
    if (cfg.kind == "gnp") {
        if (!cfg.certificate.empty())
            throw ConfigError("gnp instances carry no planted certificate");
        write_graph_file(generate_gnp(cfg.n, cfg.p, cfg.seed), cfg.output);
        return 0;
    }
    if (cfg.k < 1) throw ConfigError("--k must be at least 1 for planted instances");
    PlantedInstance inst =
        cfg.kind == "planted-monopolar"
            ? generate_planted_monopolar(cfg.n, cfg.k, cfg.p, cfg.seed, cfg.a_fraction, cfg.a_size)
            : generate_planted_subcoloring(cfg.n, cfg.k, cfg.p, cfg.seed, cfg.a_fraction,
                                           cfg.a_size);
    write_graph_file(inst.graph, cfg.output);
    if (!cfg.certificate.empty()) write_certificate(inst.certificate, cfg.certificate);
    return 0;
}

} // namespace

int run_cli(std::vector<std::string> args) {
    CLI::App app{"graph-partition recognition toolkit"};
    app.require_subcommand(1);
    RunConfig cfg;
    int result = 2;

    const std::vector<std::string> problems = {"monopolar", "subcoloring-ka", "subcoloring-total",
                                               "generic-exclusive", "bounded-a"};

    auto add_problem_options = [&](CLI::App* sub) {
        sub->add_option("--problem", cfg.problem, "partition problem to decide")
            ->required()
            ->check(CLI::IsMember(problems));
        sub->add_option("--k", cfg.k, "cluster or size bound");
        sub->add_option("--input", cfg.input, "graph file (DIMACS or edge list)")->required();
        sub->add_option("--spec-a", cfg.spec_a,
                        "A-side property (generic problems), e.g. clique or cluster:k=2");
        sub->add_option("--spec-b", cfg.spec_b, "B-side property (generic problems)");
    };

    auto* rec = app.add_subcommand("recognize", "decide an instance and emit a certificate");
    add_problem_options(rec);
    rec->add_option("--certificate", cfg.certificate, "write the YES certificate to this file");
    rec->add_option("--exclusivity", cfg.exclusivity,
                    "override the derived exclusivity order (generic-exclusive)");
    rec->add_option("--budget", cfg.budget, "subset-pair budget for generic-exclusive");
    rec->add_option("--order", cfg.order, "vertex processing order for monopolar")
        ->check(CLI::IsMember({"degree", "input"}));
    rec->add_flag("--stats", cfg.stats, "print search statistics as key=value lines");
    rec->callback([&] { result = do_recognize(cfg); });

    auto* ver = app.add_subcommand("verify", "check a certificate against a graph");
    add_problem_options(ver);
    ver->add_option("--certificate", cfg.certificate, "certificate file to check")->required();
    ver->callback([&] { result = do_verify(cfg); });

    auto* ora = app.add_subcommand("oracle", "answer by brute force (small graphs only)");
    add_problem_options(ora);
    ora->add_option("--certificate", cfg.certificate, "write the YES certificate to this file");
    ora->callback([&] { result = do_oracle(cfg); });

    auto* gen = app.add_subcommand("gen", "generate a random or planted instance");
    gen->add_option("--kind", cfg.kind, "instance family")
        ->required()
        ->check(CLI::IsMember({"gnp", "planted-monopolar", "planted-subcoloring"}));
    gen->add_option("--n", cfg.n, "vertex count")->required();
    gen->add_option("--p", cfg.p, "edge probability")->required();
    gen->add_option("--k", cfg.k, "planted A-side cluster count");
    gen->add_option("--seed", cfg.seed, "RNG seed");
    gen->add_option("--a-fraction", cfg.a_fraction, "planted A-side share of n");
    gen->add_option("--a-size", cfg.a_size, "exact planted A-side size (overrides --a-fraction)");
    gen->add_option("--output", cfg.output, "graph file to write")->required();
    gen->add_option("--certificate", cfg.certificate, "write the planted certificate here");
    gen->callback([&] { result = do_gen(cfg); });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return result;
}

} // namespace graphpart
