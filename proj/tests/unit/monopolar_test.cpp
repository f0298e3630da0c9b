#include <doctest.h>

#include "graphpart/errors.hpp"
#include "graphpart/generators.hpp"
#include "graphpart/monopolar.hpp"
#include "graphpart/oracle.hpp"
#include "graphpart/property_spec.hpp"
#include "support/graphs.hpp"

using namespace graphpart;
using namespace testsupport;

TEST_CASE("initial constraints pin the new vertex to each side") {
    Graph k2 = complete_graph(2);
    std::vector<int> a_prev = {0}, b_prev = {};
    auto [in_a, in_b] = initial_mono_constraints(k2, 1, a_prev, b_prev);
    CHECK(in_a.a_perm == std::vector<int>{1});
    CHECK(in_a.b_perm.empty());
    CHECK(in_a.a_star() == std::vector<int>{0});
    CHECK(in_b.b_perm == std::vector<int>{1});
    CHECK(in_b.a_perm.empty());

    Graph p3 = path_graph(3);
    std::vector<int> a2 = {0, 1};
    auto [pa, pb] = initial_mono_constraints(p3, 2, a2, {});
    CHECK(pa.a_perm == std::vector<int>{2});
    CHECK(pa.a_star() == std::vector<int>{0, 1});
    CHECK(pb.b_perm == std::vector<int>{2});
}

TEST_CASE("initial constraints validate the previous partition") {
    Graph p3 = path_graph(3);
    std::vector<int> bad_b = {0, 1}; // edge inside the B side
    CHECK_THROWS_AS(initial_mono_constraints(p3, 2, {}, bad_b), BadCertificate);
    std::vector<int> incomplete = {0}; // vertex 1 unplaced
    CHECK_THROWS_AS(initial_mono_constraints(p3, 2, incomplete, {}), BadCertificate);
    std::vector<int> a_with_p3 = {0, 1, 2};
    Graph p4 = path_graph(4);
    CHECK_THROWS_AS(initial_mono_constraints(p4, 3, a_with_p3, {}), BadCertificate);
}

TEST_CASE("permanent-check rejects broken permanent sets") {
    Graph k2 = complete_graph(2);
    std::vector<int> a_prev = {0};
    auto [in_a, in_b] = initial_mono_constraints(k2, 1, a_prev, {});

    MonoConstraint both_b = in_b;
    both_b.b_perm.push_back(0); // adjacent pair pinned to the edgeless side
    auto out = apply_mono_rules(both_b, 1);
    CHECK(out.kind == MonoOutcome::Kind::rejected);
    CHECK(out.rule == "permanent-check");

    Graph two = Graph::build(2, {});
    std::vector<int> lone = {0};
    auto [ia, ib] = initial_mono_constraints(two, 1, lone, {});
    MonoConstraint crowded = ia;
    crowded.a_perm.push_back(0); // two permanent singleton clusters
    CHECK(apply_mono_rules(crowded, 1).kind == MonoOutcome::Kind::rejected);
    CHECK(apply_mono_rules(crowded, 2).kind == MonoOutcome::Kind::exhausted);
}

TEST_CASE("forced-to-a pulls movable B neighbors of permanent B vertices") {
    Graph k2 = complete_graph(2);
    std::vector<int> b_prev = {0};
    MonoConstraint in_b = initial_mono_constraints(k2, 1, {}, b_prev).second;
    auto out = apply_mono_rules(in_b, 1); // 0 still movable on B, 1 permanent
    REQUIRE(out.kind == MonoOutcome::Kind::reduced);
    CHECK(out.rule == "forced-to-a");
    REQUIRE(out.children.size() == 1);
    CHECK(out.children[0].a_perm == std::vector<int>{0});
    CHECK(out.children[0].b_perm == std::vector<int>{1});
}

TEST_CASE("forced-to-b expels the middle of a permanent path") {
    // 2 is adjacent to both permanent vertices 0 and 1, which are nonadjacent
    Graph g = Graph::build(3, {{0, 2}, {1, 2}});
    std::vector<int> a_prev = {0, 2};
    auto [in_a, in_b] = initial_mono_constraints(g, 1, a_prev, {});
    MonoConstraint c = in_a; // a_perm = {1}
    c.a_perm.push_back(0);
    auto out = apply_mono_rules(c, 2);
    REQUIRE(out.kind == MonoOutcome::Kind::reduced);
    CHECK(out.rule == "forced-to-b");
    REQUIRE(out.children.size() == 1);
    CHECK(out.children[0].b_perm == std::vector<int>{2});
}

TEST_CASE("a path through one permanent vertex branches on the movable pair") {
    Graph g = monopolar_k1_example();
    std::vector<int> a_prev = {0, 1, 2}, b_prev = {3, 4, 5};
    auto [in_a, in_b] = initial_mono_constraints(g, 6, a_prev, b_prev);

    auto out = apply_mono_rules(in_a, 1);
    REQUIRE(out.kind == MonoOutcome::Kind::branch);
    CHECK(out.rule == "p3-pair-branch");
    REQUIRE(out.children.size() == 2);
    CHECK(out.children[0].b_perm == std::vector<int>{0});
    CHECK(out.children[1].b_perm == std::vector<int>{1});

    // pinning 6 to the B side immediately forces its neighbor 4 out of B
    auto out_b = apply_mono_rules(in_b, 1);
    REQUIRE(out_b.kind == MonoOutcome::Kind::reduced);
    CHECK(out_b.rule == "forced-to-a");
    CHECK(out_b.children[0].a_perm == std::vector<int>{4});
}

TEST_CASE("movable singleton clusters branch over their side") {
    Graph g = Graph::build(4, {{0, 1}, {2, 3}});
    std::vector<int> a_prev = {0, 1, 2};
    auto [in_a, in_b] = initial_mono_constraints(g, 3, a_prev, {});
    auto out = apply_mono_rules(in_a, 2);
    REQUIRE(out.kind == MonoOutcome::Kind::branch);
    CHECK(out.rule == "singleton-branch");
    REQUIRE(out.children.size() == 2);
    CHECK(out.children[0].a_perm == std::vector<int>{3, 2});
    CHECK(out.children[0].b_perm.empty());
    CHECK(out.children[1].b_perm == std::vector<int>{2});
}

TEST_CASE("one inductive step repairs the broken triangle partition") {
    Graph g = monopolar_k1_example();
    std::vector<int> a_prev = {0, 1, 2}, b_prev = {3, 4, 5};
    MonoStats stats;
    auto cert = inductive_monopolar_step(g, 6, a_prev, b_prev, 1, &stats);
    REQUIRE(cert.has_value());
    CHECK(verify_certificate(g, *cert, Problem::monopolar, 1).ok);
    CHECK(cert->side_of == std::vector<Side>{Side::A, Side::B, Side::A, Side::B, Side::A,
                                             Side::B, Side::A});
    CHECK(cert->a_clusters == std::vector<std::vector<int>>{{0, 2, 4, 6}});
    CHECK(cert->b_clusters == std::vector<std::vector<int>>{{1}, {3}, {5}});
    CHECK(stats.nodes > 0);
    CHECK(stats.cap_violations == 0);
    CHECK(stats.max_branchings_per_path <= 2);
}

TEST_CASE("inductive step outcomes on small cycles and cliques") {
    Graph c4 = cycle_graph(4);
    std::vector<int> a_prev = {0, 1}, b_prev = {2};
    CHECK_FALSE(inductive_monopolar_step(c4, 3, a_prev, b_prev, 1).has_value());

    Graph k3 = complete_graph(3);
    std::vector<int> ka = {0, 1};
    auto cert = inductive_monopolar_step(k3, 2, ka, {}, 1);
    REQUIRE(cert.has_value());
    CHECK(cert->a_vertices() == std::vector<int>{0, 1, 2});

    // the previous partition must respect the cluster bound itself
    Graph loose = Graph::build(3, {});
    std::vector<int> two_clusters = {0, 2};
    CHECK_THROWS_AS(inductive_monopolar_step(loose, 1, two_clusters, {}, 1), BadCertificate);
}

TEST_CASE("recognizer matches the oracle exhaustively on small graphs") {
    for (int n = 0; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < mask_count(n); ++mask) {
            Graph g = mask_graph(n, mask);
            for (int k = 0; k <= 4; ++k) {
                MonoStats stats;
                auto got = recognize_monopolar(g, k, &stats);
                CHECK(got.has_value() == brute_monopolar(g, k).has_value());
                if (got) {
                    auto vr = verify_certificate(g, *got, Problem::monopolar, k);
                    CHECK_MESSAGE(vr.ok, vr.reason);
                }
                CHECK(stats.cap_violations == 0);
                CHECK(stats.max_promotions_per_path <= k + 1);
                CHECK(stats.max_demotions_per_path <= k + 1);
                CHECK(stats.max_branchings_per_path + 1 <= k + 2);
            }
        }
}

TEST_CASE("recognizer matches the oracle on random mid-size graphs") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = generate_gnp(10, 0.25 + 0.02 * static_cast<double>(seed % 5), seed);
        for (int k = 0; k <= 4; ++k) {
            auto got = recognize_monopolar(g, k);
            CHECK(got.has_value() == brute_monopolar(g, k).has_value());
            if (got) CHECK(verify_certificate(g, *got, Problem::monopolar, k).ok);
        }
    }
}

TEST_CASE("one cluster is exactly split-graph recognition") {
    PropertySpec cl = specs::clique(), ed = specs::edgeless();
    for (int n = 0; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < mask_count(n); ++mask) {
            Graph g = mask_graph(n, mask);
            CHECK(recognize_monopolar(g, 1).has_value() ==
                  brute_pi_partition(g, cl, ed).has_value());
        }
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = generate_gnp(12, 0.4, seed);
        CHECK(recognize_monopolar(g, 1).has_value() == brute_pi_partition(g, cl, ed).has_value());
    }
}

TEST_CASE("answers are monotone in k and closed under vertex deletion") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        Graph g = generate_gnp(12, 0.3, seed);
        bool prev = recognize_monopolar(g, 0).has_value();
        for (int k = 1; k <= 4; ++k) {
            bool cur = recognize_monopolar(g, k).has_value();
            if (prev) CHECK(cur);
            prev = cur;
        }
        for (int k = 1; k <= 3; ++k) {
            if (!recognize_monopolar(g, k)) continue;
            for (int drop = 0; drop < g.order(); drop += 3) {
                std::vector<int> keep;
                for (int v = 0; v < g.order(); ++v)
                    if (v != drop) keep.push_back(v);
                CHECK(recognize_monopolar(g.induced(keep), k).has_value());
            }
        }
    }
}
