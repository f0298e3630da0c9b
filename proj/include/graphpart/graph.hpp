#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace graphpart {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph with sorted adjacency lists.
/// Vertices are 0-based ints. Duplicate edges collapse; self-loops are rejected.
class Graph {
public:
    Graph() = default;

    static Graph build(int n, std::span<const Edge> edges);
    static Graph build(int n, std::initializer_list<Edge> edges);

    int order() const { return n_; }
    long long edge_count() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const { return max_degree_; }
    std::span<const int> neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const;

    std::vector<Edge> edges() const;

    /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
    Graph induced(std::span<const int> vertices) const;

    /// Relabeled copy: vertex i of the result is order[i] of *this.
    Graph permuted(std::span<const int> order) const;

private:
    int n_ = 0;
    long long m_ = 0;
    int max_degree_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// Fixed pattern on at most 8 vertices, adjacency kept as bit rows.
class PatternGraph {
public:
    static constexpr int kMaxOrder = 8;

    PatternGraph() = default;
    static PatternGraph from_edges(int order, std::span<const Edge> edges);
    static PatternGraph from_edges(int order, std::initializer_list<Edge> edges);
    static PatternGraph path(int order);
    static PatternGraph clique(int order);
    static PatternGraph edgeless(int order);
    PatternGraph complement() const;

    int order() const { return order_; }
    bool adjacent(int a, int b) const { return (rows_[a] >> b) & 1; }
    bool is_clique() const;
    bool is_edgeless() const;

private:
    int order_ = 0;
    std::array<uint8_t, kMaxOrder> rows_{};
};

struct ClusterDecomposition {
    /// Connected components of G[S], each a clique, ordered by least vertex.
    /// Meaningful only when !p3.
    std::vector<std::vector<int>> clusters;
    /// Witness induced path on three vertices, stored as (midpoint, lo end, hi end);
    /// lexicographically least such triple within the first offending component.
    std::optional<std::array<int, 3>> p3;
};

ClusterDecomposition cluster_decomposition(const Graph& g, std::span<const int> subset);
ClusterDecomposition cluster_decomposition(const Graph& g);

/// Least (by position-wise vertex order) induced occurrence of `h` inside
/// G[restrict_to], as an ordered vertex tuple matching h's adjacency exactly.
std::optional<std::vector<int>> find_induced_occurrence(const Graph& g, const PatternGraph& h,
                                                        std::span<const int> restrict_to);

/// Vertices by nondecreasing degree, ties by ascending id.
std::vector<int> degree_sorted_order(const Graph& g);

} // namespace graphpart
