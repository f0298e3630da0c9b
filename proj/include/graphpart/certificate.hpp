#pragma once

#include <span>
#include <string>
#include <vector>

#include "graphpart/graph.hpp"

namespace graphpart {

enum class Side : int { A = 0, B = 1 };

enum class Problem { monopolar, subcoloring };

// Which quantity a bound k limits: the number of clusters on side A only,
// or the combined number of clusters over both sides.
enum class BoundMode { a_side, total };

// Two-sided partition with explicit cluster structure on each side.
// side_of[v] says where v lives; every vertex appears in exactly one cluster
// of its own side.
struct Bipartition {
    std::vector<Side> side_of;
    std::vector<std::vector<int>> a_clusters;
    std::vector<std::vector<int>> b_clusters;

    int a_cluster_count() const { return static_cast<int>(a_clusters.size()); }
    int b_cluster_count() const { return static_cast<int>(b_clusters.size()); }

    std::vector<int> a_vertices() const;
    std::vector<int> b_vertices() const;

    // Sorts vertices inside each cluster, orders clusters by least vertex,
    // drops empty clusters.
    void normalize();

    // Certificate for the same partition of a graph whose vertex i is
    // original_ids[i].
    Bipartition relabeled(std::span<const int> original_ids) const;

    // Builds cluster lists from a side assignment. Each side is split into
    // connected components; throws BadCertificate if a component on a side
    // that must be a cluster graph is not a clique (callers that allow
    // arbitrary B structure should not use this).
    static Bipartition from_sides(const Graph& g, std::span<const Side> sides);

    // Like from_sides but groups each side by connected components without
    // requiring cliques. For recognizers over generic properties, whose
    // sides need not be cluster graphs.
    static Bipartition from_sides_components(const Graph& g, std::span<const Side> sides);
};

struct VerifyResult {
    bool ok = true;
    std::string reason;
};

// Checks structural soundness (coverage, disjointness) and the cluster-graph
// conditions for the given problem and bound. Runs in O(n + m).
VerifyResult verify_certificate(const Graph& g, const Bipartition& cert, Problem problem, int k,
                                BoundMode mode = BoundMode::a_side);

} // namespace graphpart
