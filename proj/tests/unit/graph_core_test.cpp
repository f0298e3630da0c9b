#include <doctest.h>

#include <algorithm>
#include <set>

#include "graphpart/errors.hpp"
#include "graphpart/generators.hpp"
#include "graphpart/graph.hpp"
#include "support/graphs.hpp"

using namespace graphpart;
using namespace testsupport;

TEST_CASE("build collapses duplicates and keeps counts consistent") {
    Graph k3 = complete_graph(3);
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.max_degree() == 2);

    Graph c4 = cycle_graph(4);
    CHECK(c4.edge_count() == 4);
    CHECK(c4.max_degree() == 2);

    Graph dup = Graph::build(2, {{0, 1}, {1, 0}});
    CHECK(dup.edge_count() == 1);
    CHECK(dup.adjacent(0, 1));
    CHECK(dup.adjacent(1, 0));
}

TEST_CASE("build rejects self-loops and bad endpoints") {
    CHECK_THROWS_AS(Graph::build(3, {{1, 1}}), InvalidEdge);
    CHECK_THROWS_AS(Graph::build(3, {{0, 3}}), OutOfRange);
    CHECK_THROWS_AS(Graph::build(3, {{-1, 0}}), OutOfRange);
}

TEST_CASE("adjacency lists are sorted and symmetric; degree sum is twice m") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = generate_gnp(12, 0.4, seed);
        long long degsum = 0;
        for (int v = 0; v < g.order(); ++v) {
            auto nb = g.neighbors(v);
            CHECK(std::is_sorted(nb.begin(), nb.end()));
            degsum += g.degree(v);
            for (int w : nb) CHECK(g.adjacent(w, v));
        }
        CHECK(degsum == 2 * g.edge_count());
        int maxdeg = 0;
        for (int v = 0; v < g.order(); ++v) maxdeg = std::max(maxdeg, g.degree(v));
        CHECK(g.max_degree() == maxdeg);
    }
}

TEST_CASE("induced subgraph relabels to positions") {
    Graph c5 = cycle_graph(5);
    std::vector<int> keep = {1, 2, 4};
    Graph h = c5.induced(keep);
    CHECK(h.order() == 3);
    CHECK(h.adjacent(0, 1));      // 1-2 survives
    CHECK_FALSE(h.adjacent(0, 2)); // 1-4 is a nonedge
    CHECK_FALSE(h.adjacent(1, 2)); // 2-4 is a nonedge
}

TEST_CASE("permuted relabels edges consistently") {
    Graph p3 = path_graph(3);
    std::vector<int> order = {2, 0, 1}; // result vertex i is order[i]
    Graph q = p3.permuted(order);
    CHECK(q.order() == 3);
    CHECK(q.edge_count() == 2);
    // edges 0-1 and 1-2 of the path map to pairs of positions of 0,1,2
    CHECK(q.adjacent(1, 2)); // 0-1
    CHECK(q.adjacent(2, 0)); // 1-2
    CHECK_FALSE(q.adjacent(0, 1));
}

TEST_CASE("pattern constructors and complement") {
    PatternGraph p3 = PatternGraph::path(3);
    CHECK(p3.order() == 3);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
    CHECK_FALSE(p3.adjacent(0, 2));
    CHECK_FALSE(p3.is_clique());
    CHECK_FALSE(p3.is_edgeless());

    CHECK(PatternGraph::clique(4).is_clique());
    CHECK(PatternGraph::edgeless(3).is_edgeless());
    CHECK(PatternGraph::clique(1).is_edgeless());

    PatternGraph co = p3.complement();
    CHECK_FALSE(co.adjacent(0, 1));
    CHECK(co.adjacent(0, 2));
}

TEST_CASE("cluster decomposition of cliques and paths") {
    Graph k3 = complete_graph(3);
    auto whole = cluster_decomposition(k3);
    REQUIRE_FALSE(whole.p3.has_value());
    REQUIRE(whole.clusters.size() == 1);
    CHECK(whole.clusters[0] == std::vector<int>{0, 1, 2});

    Graph p3 = path_graph(3);
    auto broken = cluster_decomposition(p3);
    REQUIRE(broken.p3.has_value());
    // witness stored as (midpoint, low end, high end)
    CHECK(*broken.p3 == std::array<int, 3>{1, 0, 2});

    Graph c4 = cycle_graph(4);
    std::vector<int> subset = {0, 1, 3};
    auto sub = cluster_decomposition(c4, subset);
    REQUIRE(sub.p3.has_value());
    CHECK(*sub.p3 == std::array<int, 3>{0, 1, 3});
}

TEST_CASE("cluster decomposition absence agrees with a triple scan") {
    auto scan_has_p3 = [](const Graph& g, const std::vector<int>& subset) {
        for (size_t a = 0; a < subset.size(); ++a)
            for (size_t b = 0; b < subset.size(); ++b)
                for (size_t c = b + 1; c < subset.size(); ++c) {
                    if (a == b || a == c) continue;
                    int mid = subset[a], x = subset[b], y = subset[c];
                    if (g.adjacent(mid, x) && g.adjacent(mid, y) && !g.adjacent(x, y))
                        return true;
                }
        return false;
    };
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < mask_count(n); ++mask) {
            Graph g = mask_graph(n, mask);
            auto dec = cluster_decomposition(g);
            CHECK(dec.p3.has_value() == scan_has_p3(g, iota_vec(n)));
            if (dec.p3) {
                auto [m, x, y] = *dec.p3;
                CHECK(g.adjacent(m, x));
                CHECK(g.adjacent(m, y));
                CHECK_FALSE(g.adjacent(x, y));
            } else {
                size_t covered = 0;
                for (const auto& cl : dec.clusters) covered += cl.size();
                CHECK(covered == static_cast<size_t>(n));
            }
        }
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = generate_gnp(8, 0.35, seed);
        std::vector<int> subset = {0, 2, 3, 5, 6, 7};
        CHECK(cluster_decomposition(g, subset).p3.has_value() == scan_has_p3(g, subset));
    }
}

TEST_CASE("certificate verification catches structural breaks") {
    Graph c4 = cycle_graph(4);
    Bipartition bad;
    bad.side_of = {Side::A, Side::A, Side::B, Side::B};
    bad.a_clusters = {{0, 1}};
    bad.b_clusters = {{2}, {3}};
    // edge 2-3 joins two B clusters; B must be edgeless under monopolar
    CHECK_FALSE(verify_certificate(c4, bad, Problem::monopolar, 1).ok);

    Bipartition good;
    good.side_of = {Side::B, Side::A, Side::B, Side::A};
    good.a_clusters = {{1}, {3}};
    good.b_clusters = {{0}, {2}};
    CHECK(verify_certificate(c4, good, Problem::monopolar, 2).ok);
    // same partition fails the tighter cluster bound
    CHECK_FALSE(verify_certificate(c4, good, Problem::monopolar, 1).ok);
    // and under the joint bound it needs all four clusters
    CHECK(verify_certificate(c4, good, Problem::subcoloring, 4, BoundMode::total).ok);
    CHECK_FALSE(verify_certificate(c4, good, Problem::subcoloring, 3, BoundMode::total).ok);
}

TEST_CASE("certificate verification catches coverage breaks") {
    Graph k3 = complete_graph(3);
    Bipartition twice;
    twice.side_of = {Side::A, Side::A, Side::A};
    twice.a_clusters = {{0, 1, 2}, {2}};
    CHECK_FALSE(verify_certificate(k3, twice, Problem::monopolar, 2).ok);

    Bipartition missing;
    missing.side_of = {Side::A, Side::A, Side::A};
    missing.a_clusters = {{0, 1}};
    CHECK_FALSE(verify_certificate(k3, missing, Problem::monopolar, 1).ok);

    Bipartition side_mismatch;
    side_mismatch.side_of = {Side::A, Side::A, Side::B};
    side_mismatch.a_clusters = {{0, 1, 2}};
    CHECK_FALSE(verify_certificate(k3, side_mismatch, Problem::monopolar, 1).ok);

    Bipartition not_clique;
    not_clique.side_of = {Side::A, Side::A, Side::B};
    Graph p3 = path_graph(3);
    not_clique.a_clusters = {{0, 2}};
    not_clique.b_clusters = {{1}};
    CHECK_FALSE(verify_certificate(p3, not_clique, Problem::subcoloring, 2).ok);
}

TEST_CASE("induced occurrence search on fixed patterns") {
    Graph p3 = path_graph(3);
    auto hit = find_induced_occurrence(p3, PatternGraph::path(3), iota_vec(3));
    REQUIRE(hit.has_value());
    CHECK(hit->size() == 3);

    CHECK_FALSE(
        find_induced_occurrence(complete_graph(3), PatternGraph::path(3), iota_vec(3)).has_value());
    CHECK_FALSE(
        find_induced_occurrence(cycle_graph(5), PatternGraph::clique(3), iota_vec(5)).has_value());
}

TEST_CASE("induced occurrence agrees with naive tuple enumeration") {
    std::vector<PatternGraph> patterns = {
        PatternGraph::path(3),   PatternGraph::clique(3),   PatternGraph::edgeless(3),
        PatternGraph::path(4),   PatternGraph::clique(4),
        PatternGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
    };
    for (int n = 1; n <= 4; ++n)
        for (std::uint64_t mask = 0; mask < mask_count(n); ++mask) {
            Graph g = mask_graph(n, mask);
            for (const auto& h : patterns) {
                auto got = find_induced_occurrence(g, h, iota_vec(n));
                CHECK(got.has_value() == naive_has_induced(g, h, iota_vec(n)));
                if (got)
                    for (int a = 0; a < h.order(); ++a)
                        for (int b = a + 1; b < h.order(); ++b)
                            CHECK(g.adjacent((*got)[a], (*got)[b]) == h.adjacent(a, b));
            }
        }
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        Graph g = generate_gnp(8, 0.4, seed);
        for (const auto& h : patterns)
            CHECK(find_induced_occurrence(g, h, iota_vec(8)).has_value() ==
                  naive_has_induced(g, h, iota_vec(8)));
    }
}

TEST_CASE("degree-sorted order is a nondecreasing permutation with id ties") {
    Graph star = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(degree_sorted_order(star) == std::vector<int>{1, 2, 3, 0});
    CHECK(degree_sorted_order(complete_graph(3)) == std::vector<int>{0, 1, 2});
    CHECK(degree_sorted_order(path_graph(3)) == std::vector<int>{0, 2, 1});

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = generate_gnp(15, 0.3, seed);
        auto order = degree_sorted_order(g);
        REQUIRE(order.size() == 15);
        CHECK(std::set<int>(order.begin(), order.end()).size() == 15);
        for (size_t i = 0; i + 1 < order.size(); ++i) {
            CHECK(g.degree(order[i]) <= g.degree(order[i + 1]));
            if (g.degree(order[i]) == g.degree(order[i + 1])) CHECK(order[i] < order[i + 1]);
        }
    }
}
