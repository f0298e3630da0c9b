#include <doctest.h>

#include "graphpart/generators.hpp"
#include "graphpart/inductive.hpp"
#include "graphpart/monopolar.hpp"
#include "graphpart/oracle.hpp"
#include "support/graphs.hpp"

using namespace graphpart;
using namespace testsupport;

TEST_CASE("prefix view exposes exactly the grown part of the graph") {
    // ids already in processing order
    Graph g = Graph::build(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    PrefixView view(g);
    CHECK(view.size() == 0);
    CHECK(view.extend() == 0);
    CHECK(view.degree(0) == 0);
    CHECK(view.extend() == 1);
    CHECK(view.adjacent(0, 1));
    CHECK(view.max_degree() == 1);
    CHECK(view.extend() == 2);
    CHECK(view.degree(0) == 2);
    CHECK(view.neighbors(0).size() == 2);
    CHECK_FALSE(view.adjacent(1, 2));
    CHECK(view.extend() == 3);
    CHECK(view.size() == 4);
    CHECK(view.max_degree() == 2);
    CHECK(view.neighbors(3).size() == 2);
}

TEST_CASE("driver handles the empty graph") {
    MonopolarEngine engine;
    auto cert = recognize_inductively(Graph::build(0, {}), 1, engine, OrderMode::degree_sorted);
    REQUIRE(cert.has_value());
    CHECK(cert->side_of.empty());
}

TEST_CASE("driver recognizes a clique and fails the four-cycle early") {
    MonopolarEngine eng1;
    auto k3 = recognize_inductively(complete_graph(3), 1, eng1, OrderMode::degree_sorted);
    REQUIRE(k3.has_value());
    CHECK(verify_certificate(complete_graph(3), *k3, Problem::monopolar, 1).ok);

    MonopolarEngine eng2;
    DriverStats stats;
    auto c4 = recognize_inductively(cycle_graph(4), 1, eng2, OrderMode::degree_sorted, &stats);
    CHECK_FALSE(c4.has_value());
    CHECK(stats.failed_prefix >= 1);
    CHECK(stats.failed_prefix <= 4);
}

TEST_CASE("a failing prefix is itself unrecognizable") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = generate_gnp(12, 0.35, seed);
        for (int k = 0; k <= 2; ++k) {
            MonopolarEngine engine;
            DriverStats stats;
            auto cert = recognize_inductively(g, k, engine, OrderMode::degree_sorted, &stats);
            if (cert) {
                CHECK(verify_certificate(g, *cert, Problem::monopolar, k).ok);
                continue;
            }
            REQUIRE(stats.failed_prefix > 0);
            std::vector<int> prefix(stats.order.begin(),
                                    stats.order.begin() + stats.failed_prefix);
            CHECK_FALSE(brute_monopolar(g.induced(prefix), k).has_value());
        }
    }
}

TEST_CASE("the answer does not depend on the processing order") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = generate_gnp(11, 0.3, seed);
        for (int k = 0; k <= 3; ++k) {
            MonopolarEngine by_degree;
            MonopolarEngine by_input;
            bool a = recognize_inductively(g, k, by_degree, OrderMode::degree_sorted).has_value();
            bool b = recognize_inductively(g, k, by_input, OrderMode::input).has_value();
            CHECK(a == b);
        }
    }
}

TEST_CASE("degree-sorted growth keeps the prefix degree bound") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = generate_gnp(14, 0.4, seed);
        MonopolarEngine engine;
        DriverStats stats;
        recognize_inductively(g, 3, engine, OrderMode::degree_sorted, &stats);
        CHECK(stats.degree_bound_violations == 0);
        // the recorded order is a permutation with nondecreasing degrees
        REQUIRE(static_cast<int>(stats.order.size()) == g.order());
        for (size_t i = 0; i + 1 < stats.order.size(); ++i)
            CHECK(g.degree(stats.order[i]) <= g.degree(stats.order[i + 1]));
    }
}
