#include <doctest.h>

#include <cstdlib>

#include "graphpart/errors.hpp"
#include "graphpart/generators.hpp"
#include "graphpart/oracle.hpp"
#include "graphpart/property_spec.hpp"
#include "support/graphs.hpp"

using namespace graphpart;
using namespace testsupport;

namespace {

void check_verified(const Graph& g, const std::optional<Bipartition>& p, Problem problem, int k,
                    BoundMode mode) {
    REQUIRE(p.has_value());
    auto vr = verify_certificate(g, *p, problem, k, mode);
    CHECK_MESSAGE(vr.ok, vr.reason);
}

} // namespace

TEST_CASE("monopolar oracle first hits follow the counter order") {
    auto k3 = brute_monopolar(complete_graph(3), 1);
    check_verified(complete_graph(3), k3, Problem::monopolar, 1, BoundMode::a_side);
    CHECK(k3->side_of == std::vector<Side>{Side::A, Side::A, Side::A});
    CHECK(k3->a_clusters == std::vector<std::vector<int>>{{0, 1, 2}});

    CHECK_FALSE(brute_monopolar(cycle_graph(4), 1).has_value());

    auto c4 = brute_monopolar(cycle_graph(4), 2);
    check_verified(cycle_graph(4), c4, Problem::monopolar, 2, BoundMode::a_side);
    CHECK(c4->side_of == std::vector<Side>{Side::B, Side::A, Side::B, Side::A});
    CHECK(c4->a_clusters == std::vector<std::vector<int>>{{1}, {3}});
    CHECK(c4->b_clusters == std::vector<std::vector<int>>{{0}, {2}});

    auto c5 = brute_monopolar(cycle_graph(5), 2);
    check_verified(cycle_graph(5), c5, Problem::monopolar, 2, BoundMode::a_side);
    CHECK(c5->side_of ==
          std::vector<Side>{Side::B, Side::A, Side::B, Side::A, Side::A});
    CHECK(c5->a_clusters == std::vector<std::vector<int>>{{1}, {3, 4}});
    CHECK(c5->b_clusters == std::vector<std::vector<int>>{{0}, {2}});
}

TEST_CASE("subcoloring oracle under both bound modes") {
    Graph c5 = cycle_graph(5);
    CHECK_FALSE(brute_subcoloring(c5, 1, BoundMode::a_side).has_value());
    auto asid = brute_subcoloring(c5, 2, BoundMode::a_side);
    check_verified(c5, asid, Problem::subcoloring, 2, BoundMode::a_side);
    CHECK(asid->a_clusters == std::vector<std::vector<int>>{{1}, {3, 4}});

    Graph c4 = cycle_graph(4);
    auto total4 = brute_subcoloring(c4, 2, BoundMode::total);
    check_verified(c4, total4, Problem::subcoloring, 2, BoundMode::total);
    CHECK(total4->side_of == std::vector<Side>{Side::B, Side::B, Side::A, Side::A});
    CHECK(total4->a_clusters == std::vector<std::vector<int>>{{2, 3}});
    CHECK(total4->b_clusters == std::vector<std::vector<int>>{{0, 1}});

    // C5 needs four clusters in total: any cover by two edges and a single
    // vertex has all three parts pairwise adjacent, and three mutually
    // conflicting clusters cannot split over two sides.
    CHECK_FALSE(brute_subcoloring(c5, 2, BoundMode::total).has_value());
    CHECK_FALSE(brute_subcoloring(c5, 3, BoundMode::total).has_value());
    auto total5 = brute_subcoloring(c5, 4, BoundMode::total);
    check_verified(c5, total5, Problem::subcoloring, 4, BoundMode::total);
    CHECK(total5->a_clusters == std::vector<std::vector<int>>{{1}, {3, 4}});
    CHECK(total5->b_clusters == std::vector<std::vector<int>>{{0}, {2}});

    auto k3 = brute_subcoloring(complete_graph(3), 1, BoundMode::total);
    check_verified(complete_graph(3), k3, Problem::subcoloring, 1, BoundMode::total);
    CHECK(k3->side_of == std::vector<Side>{Side::A, Side::A, Side::A});
}

TEST_CASE("two-property oracle with clique versus edgeless") {
    PropertySpec cl = specs::clique(), ed = specs::edgeless();

    auto k2 = brute_pi_partition(complete_graph(2), cl, ed);
    REQUIRE(k2.has_value());
    CHECK(k2->side_of == std::vector<Side>{Side::A, Side::A});

    auto p3 = brute_pi_partition(path_graph(3), cl, ed);
    REQUIRE(p3.has_value());
    CHECK(p3->side_of == std::vector<Side>{Side::B, Side::A, Side::A});
    CHECK(p3->a_clusters == std::vector<std::vector<int>>{{1, 2}});
    CHECK(p3->b_clusters == std::vector<std::vector<int>>{{0}});

    CHECK_FALSE(brute_pi_partition(cycle_graph(5), cl, ed).has_value());
}

TEST_CASE("oracle presence is exactly min-cluster threshold and monotone in k") {
    for (int n = 0; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < mask_count(n); ++mask) {
            Graph g = mask_graph(n, mask);
            auto mono_min = brute_monopolar_min_clusters(g);
            auto ka_min = brute_subcoloring_min_clusters(g, BoundMode::a_side);
            auto tot_min = brute_subcoloring_min_clusters(g, BoundMode::total);
            for (int k = 0; k <= 4; ++k) {
                CHECK(brute_monopolar(g, k).has_value() == (mono_min && *mono_min <= k));
                CHECK(brute_subcoloring(g, k, BoundMode::a_side).has_value() ==
                      (ka_min && *ka_min <= k));
                CHECK(brute_subcoloring(g, k, BoundMode::total).has_value() ==
                      (tot_min && *tot_min <= k));
            }
        }
    CHECK(*brute_monopolar_min_clusters(complete_graph(3)) == 1);
    CHECK(*brute_monopolar_min_clusters(cycle_graph(4)) == 2);
    CHECK(*brute_subcoloring_min_clusters(cycle_graph(5), BoundMode::total) == 4);
}

TEST_CASE("oracle answers are hereditary under vertex deletion") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = generate_gnp(10, 0.3, seed);
        for (int k = 1; k <= 3; ++k) {
            if (!brute_monopolar(g, k)) continue;
            for (int drop = 0; drop < g.order(); ++drop) {
                std::vector<int> keep;
                for (int v = 0; v < g.order(); ++v)
                    if (v != drop) keep.push_back(v);
                CHECK(brute_monopolar(g.induced(keep), k).has_value());
            }
        }
    }
}

TEST_CASE("size guards throw and the environment override lowers them") {
    Graph big = Graph::build(25, {});
    CHECK_THROWS_AS(brute_monopolar(big, 1), OracleSizeExceeded);
    CHECK_THROWS_AS(brute_subcoloring(big, 1, BoundMode::a_side), OracleSizeExceeded);
    Graph mid = Graph::build(21, {});
    CHECK_THROWS_AS(brute_pi_partition(mid, specs::clique(), specs::edgeless()),
                    OracleSizeExceeded);

    setenv("GRAPHPART_ORACLE_LIMIT", "4", 1);
    CHECK_THROWS_AS(brute_monopolar(complete_graph(5), 1), OracleSizeExceeded);
    unsetenv("GRAPHPART_ORACLE_LIMIT");
    CHECK(brute_monopolar(complete_graph(5), 1).has_value());
}

TEST_CASE("empty graph is trivially recognizable") {
    Graph empty = Graph::build(0, {});
    auto p = brute_monopolar(empty, 0);
    REQUIRE(p.has_value());
    CHECK(p->side_of.empty());
    CHECK(p->a_clusters.empty());
    CHECK(p->b_clusters.empty());
}
