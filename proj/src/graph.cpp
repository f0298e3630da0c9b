#include "graphpart/graph.hpp"

#include <algorithm>
#include <string>

#include "graphpart/errors.hpp"

namespace graphpart {

Graph Graph::build(int n, std::span<const Edge> edges) {
    if (n < 0) throw OutOfRange("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw OutOfRange("edge endpoint " + std::to_string(u < 0 || u >= n ? u : v) +
                             " outside [0, " + std::to_string(n) + ")");
        if (u == v) throw InvalidEdge("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        g.m_ += static_cast<long long>(nb.size());
        g.max_degree_ = std::max(g.max_degree_, static_cast<int>(nb.size()));
    }
    g.m_ /= 2;
    return g;
}

Graph Graph::build(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(std::span<const int> vertices) const {
    std::vector<int> new_id(n_, -1);
    for (size_t i = 0; i < vertices.size(); ++i) new_id[vertices[i]] = static_cast<int>(i);
    Graph g;
    g.n_ = static_cast<int>(vertices.size());
    g.adj_.assign(g.n_, {});
    for (size_t i = 0; i < vertices.size(); ++i) {
        for (int w : adj_[vertices[i]])
            if (new_id[w] >= 0) g.adj_[i].push_back(new_id[w]);
        std::sort(g.adj_[i].begin(), g.adj_[i].end());
        g.m_ += static_cast<long long>(g.adj_[i].size());
        g.max_degree_ = std::max(g.max_degree_, static_cast<int>(g.adj_[i].size()));
    }
    g.m_ /= 2;
    return g;
}

Graph Graph::permuted(std::span<const int> order) const {
    std::vector<int> new_id(n_, -1);
    for (size_t i = 0; i < order.size(); ++i) new_id[order[i]] = static_cast<int>(i);
    Graph g;
    g.n_ = n_;
    g.m_ = m_;
    g.max_degree_ = max_degree_;
    g.adj_.assign(n_, {});
    for (int i = 0; i < n_; ++i) {
        g.adj_[i].reserve(adj_[order[i]].size());
        for (int w : adj_[order[i]]) g.adj_[i].push_back(new_id[w]);
        std::sort(g.adj_[i].begin(), g.adj_[i].end());
    }
    return g;
}

PatternGraph PatternGraph::from_edges(int order, std::span<const Edge> edges) {
    if (order < 0 || order > kMaxOrder) throw OutOfRange("pattern order must be in [0, 8]");
    PatternGraph p;
    p.order_ = order;
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= order || v < 0 || v >= order) throw OutOfRange("pattern edge endpoint out of range");
        if (u == v) throw InvalidEdge("pattern self-loop");
        p.rows_[u] |= static_cast<uint8_t>(1u << v);
        p.rows_[v] |= static_cast<uint8_t>(1u << u);
    }
    return p;
}

PatternGraph PatternGraph::from_edges(int order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
}

PatternGraph PatternGraph::path(int order) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < order; ++i) e.emplace_back(i, i + 1);
    return from_edges(order, e);
}

PatternGraph PatternGraph::clique(int order) {
    std::vector<Edge> e;
    for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j) e.emplace_back(i, j);
    return from_edges(order, e);
}

PatternGraph PatternGraph::edgeless(int order) { return from_edges(order, {}); }

PatternGraph PatternGraph::complement() const {
    PatternGraph p;
    p.order_ = order_;
    for (int i = 0; i < order_; ++i) {
        uint8_t all = static_cast<uint8_t>(((1u << order_) - 1) & ~(1u << i));
        p.rows_[i] = static_cast<uint8_t>(all & ~rows_[i]);
    }
    return p;
}

bool PatternGraph::is_clique() const {
    for (int i = 0; i < order_; ++i)
        for (int j = i + 1; j < order_; ++j)
            if (!adjacent(i, j)) return false;
    return true;
}

bool PatternGraph::is_edgeless() const {
    for (int i = 0; i < order_; ++i)
        if (rows_[i]) return false;
    return true;
}

ClusterDecomposition cluster_decomposition(const Graph& g, std::span<const int> subset) {
    ClusterDecomposition out;
    std::vector<char> in_sub(g.order(), 0);
    std::vector<char> seen(g.order(), 0);
    for (int v : subset) in_sub[v] = 1;

    std::vector<int> stack, comp;
    for (int s : subset) {
        if (seen[s]) continue;
        comp.clear();
        stack.assign(1, s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (in_sub[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        // Clique test: within G[S] every neighbor of v lies in v's component,
        // so the component is a clique iff every member sees |comp|-1 of them.
        bool clique = true;
        for (int v : comp) {
            int d = 0;
            for (int w : g.neighbors(v)) d += in_sub[w];
            if (d != static_cast<int>(comp.size()) - 1) {
                clique = false;
                break;
            }
        }
        if (!clique) {
            // Least (mid, lo, hi) witness within this component.
            for (int mid : comp) {
                std::vector<int> nb;
                for (int w : g.neighbors(mid))
                    if (in_sub[w]) nb.push_back(w);
                for (size_t a = 0; a < nb.size(); ++a)
                    for (size_t b = a + 1; b < nb.size(); ++b)
                        if (!g.adjacent(nb[a], nb[b])) {
                            out.clusters.clear();
                            out.p3 = {mid, nb[a], nb[b]};
                            return out;
                        }
            }
        }
        out.clusters.push_back(std::move(comp));
    }
    return out;
}

ClusterDecomposition cluster_decomposition(const Graph& g) {
    std::vector<int> all(g.order());
    for (int i = 0; i < g.order(); ++i) all[i] = i;
    return cluster_decomposition(g, all);
}

namespace {

bool extend_occurrence(const Graph& g, const PatternGraph& h, std::span<const int> cands,
                       std::vector<char>& used, std::vector<int>& chosen) {
    int pos = static_cast<int>(chosen.size());
    if (pos == h.order()) return true;
    for (size_t ci = 0; ci < cands.size(); ++ci) {
        int v = cands[ci];
        if (used[ci]) continue;
        bool ok = true;
        for (int j = 0; j < pos && ok; ++j)
            ok = g.adjacent(v, chosen[j]) == h.adjacent(pos, j);
        if (!ok) continue;
        used[ci] = 1;
        chosen.push_back(v);
        if (extend_occurrence(g, h, cands, used, chosen)) return true;
        chosen.pop_back();
        used[ci] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_induced_occurrence(const Graph& g, const PatternGraph& h,
                                                        std::span<const int> restrict_to) {
    if (h.order() > static_cast<int>(restrict_to.size())) return std::nullopt;
    std::vector<int> cands(restrict_to.begin(), restrict_to.end());
    std::sort(cands.begin(), cands.end());
    std::vector<char> used(cands.size(), 0);
    std::vector<int> chosen;
    chosen.reserve(h.order());
    if (extend_occurrence(g, h, cands, used, chosen)) return chosen;
    return std::nullopt;
}

std::vector<int> degree_sorted_order(const Graph& g) {
    int n = g.order();
    std::vector<std::vector<int>> buckets(g.max_degree() + 1);
    for (int v = 0; v < n; ++v) buckets[g.degree(v)].push_back(v);
    std::vector<int> order;
    order.reserve(n);
    for (const auto& b : buckets) order.insert(order.end(), b.begin(), b.end());
    return order;
}

} // namespace graphpart
