#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphpart/certificate.hpp"
#include "graphpart/errors.hpp"
#include "graphpart/exclusive.hpp"
#include "graphpart/generators.hpp"
#include "graphpart/graph.hpp"
#include "graphpart/io.hpp"
#include "graphpart/monopolar.hpp"
#include "graphpart/oracle.hpp"
#include "graphpart/property_spec.hpp"
#include "graphpart/subcoloring.hpp"
#include "graphpart/total.hpp"
#include "graphpart/twosat.hpp"

namespace py = pybind11;
using namespace graphpart;

namespace {

using Clusters = std::vector<std::vector<int>>;

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Edge> e(edges.begin(), edges.end());
    return Graph::build(n, e);
}

// (a_clusters, b_clusters) or None; cluster lists fully describe a partition
std::optional<std::pair<Clusters, Clusters>> packed(std::optional<Bipartition> cert) {
    if (!cert) return std::nullopt;
    return std::make_pair(std::move(cert->a_clusters), std::move(cert->b_clusters));
}

Bipartition unpack(int n, const Clusters& a_clusters, const Clusters& b_clusters) {
    Bipartition p;
    p.side_of.assign(n, Side::B);
    p.a_clusters = a_clusters;
    p.b_clusters = b_clusters;
    for (const auto& cl : a_clusters)
        for (int v : cl) {
            if (v < 0 || v >= n) throw BadCertificate("cluster vertex out of range");
            p.side_of[v] = Side::A;
        }
    return p;
}

std::pair<Problem, BoundMode> problem_of(const std::string& name) {
    if (name == "monopolar") return {Problem::monopolar, BoundMode::a_side};
    if (name == "subcoloring-ka") return {Problem::subcoloring, BoundMode::a_side};
    if (name == "subcoloring-total") return {Problem::subcoloring, BoundMode::total};
    throw ConfigError("unknown problem: " + name);
}

} // namespace

PYBIND11_MODULE(_graphpart, m) {
    m.doc() = "graph-partition recognition toolkit";

    py::register_exception<Error>(m, "GraphpartError");

    m.def(
        "recognize",
        [](const std::string& problem, int n, const std::vector<std::pair<int, int>>& edges,
           int k) {
            Graph g = make_graph(n, edges);
            if (problem == "monopolar") return packed(recognize_monopolar(g, k));
            if (problem == "subcoloring-ka") return packed(recognize_subcoloring_ka(g, k));
            if (problem == "subcoloring-total") return packed(recognize_subcoloring_total(g, k));
            throw ConfigError("unknown problem: " + problem);
        },
        py::arg("problem"), py::arg("n"), py::arg("edges"), py::arg("k"),
        "Decide a partition problem; returns (a_clusters, b_clusters) or None.");

    m.def(
        "recognize_generic",
        [](int n, const std::vector<std::pair<int, int>>& edges, const std::string& spec_a,
           const std::string& spec_b) {
            Graph g = make_graph(n, edges);
            PropertySpec sa = parse_property_spec(spec_a), sb = parse_property_spec(spec_b);
            return packed(recognize_exclusive(g, sa, sb, derive_exclusivity(sa, sb)));
        },
        py::arg("n"), py::arg("edges"), py::arg("spec_a"), py::arg("spec_b"),
        "Partition into two named hereditary properties, e.g. 'clique' vs 'edgeless'.");

    m.def(
        "oracle",
        [](const std::string& problem, int n, const std::vector<std::pair<int, int>>& edges,
           int k) {
            Graph g = make_graph(n, edges);
            if (problem == "monopolar") return packed(brute_monopolar(g, k));
            auto [pr, mode] = problem_of(problem);
            (void)pr;
            return packed(brute_subcoloring(g, k, mode));
        },
        py::arg("problem"), py::arg("n"), py::arg("edges"), py::arg("k"),
        "Brute-force ground truth for small graphs.");

    m.def(
        "verify",
        [](const std::string& problem, int n, const std::vector<std::pair<int, int>>& edges,
           int k, const Clusters& a_clusters, const Clusters& b_clusters) {
            Graph g = make_graph(n, edges);
            auto [pr, mode] = problem_of(problem);
            VerifyResult vr = verify_certificate(g, unpack(n, a_clusters, b_clusters), pr, k, mode);
            return std::make_pair(vr.ok, vr.reason);
        },
        py::arg("problem"), py::arg("n"), py::arg("edges"), py::arg("k"), py::arg("a_clusters"),
        py::arg("b_clusters"), "Check a certificate; returns (ok, reason).");

    m.def(
        "generate_gnp",
        [](int n, double p, std::uint64_t seed) {
            return generate_gnp(n, p, seed).edges();
        },
        py::arg("n"), py::arg("p"), py::arg("seed"), "Edge list of a seeded G(n, p) draw.");

    m.def(
        "generate_planted",
        [](const std::string& kind, int n, int k, double p, std::uint64_t seed,
           double a_fraction, int a_size) {
            PlantedInstance inst =
                kind == "planted-monopolar"
                    ? generate_planted_monopolar(n, k, p, seed, a_fraction, a_size)
                    : kind == "planted-subcoloring"
                          ? generate_planted_subcoloring(n, k, p, seed, a_fraction, a_size)
                          : throw ConfigError("unknown kind: " + kind);
            return std::make_pair(inst.graph.edges(),
                                  std::make_pair(inst.certificate.a_clusters,
                                                 inst.certificate.b_clusters));
        },
        py::arg("kind"), py::arg("n"), py::arg("k"), py::arg("p"), py::arg("seed"),
        py::arg("a_fraction") = 0.3, py::arg("a_size") = -1,
        "Planted instance; returns (edges, (a_clusters, b_clusters)).");

    m.def(
        "solve_twosat",
        [](int var_count, const std::vector<std::pair<int, int>>& clauses) {
            TwoSatFormula f;
            f.var_count = var_count;
            for (auto [a, b] : clauses) {
                auto lit = [](int x) {
                    if (x == 0) throw ConfigError("literals are nonzero: +-(var+1)");
                    return Literal{std::abs(x) - 1, x > 0};
                };
                f.clauses.push_back({lit(a), lit(b)});
            }
            auto got = solve_twosat(f);
            return got ? std::optional<std::vector<bool>>(
                             std::vector<bool>(got->begin(), got->end()))
                       : std::nullopt;
        },
        py::arg("var_count"), py::arg("clauses"),
        "DIMACS-style 2-SAT: clauses as pairs of nonzero ints, negative = negated.");

    m.def("parse_graph", [](const std::string& text) {
        Graph g = parse_graph_text(text);
        return std::make_pair(g.order(), g.edges());
    });
    m.def("format_graph", [](int n, const std::vector<std::pair<int, int>>& edges) {
        return format_graph(make_graph(n, edges));
    });
}
