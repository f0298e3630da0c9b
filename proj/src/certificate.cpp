#include "graphpart/certificate.hpp"

#include <algorithm>

#include "graphpart/errors.hpp"

namespace graphpart {

std::vector<int> Bipartition::a_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(side_of.size()); ++v)
        if (side_of[v] == Side::A) out.push_back(v);
    return out;
}

std::vector<int> Bipartition::b_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(side_of.size()); ++v)
        if (side_of[v] == Side::B) out.push_back(v);
    return out;
}

namespace {

void normalize_side(std::vector<std::vector<int>>& clusters) {
    for (auto& c : clusters) std::sort(c.begin(), c.end());
    clusters.erase(std::remove_if(clusters.begin(), clusters.end(),
                                  [](const std::vector<int>& c) { return c.empty(); }),
                   clusters.end());
    std::sort(clusters.begin(), clusters.end(),
              [](const std::vector<int>& x, const std::vector<int>& y) { return x[0] < y[0]; });
}

} // namespace

void Bipartition::normalize() {
    normalize_side(a_clusters);
    normalize_side(b_clusters);
}

Bipartition Bipartition::relabeled(std::span<const int> original_ids) const {
    int n_orig = 0;
    for (int id : original_ids) n_orig = std::max(n_orig, id + 1);
    Bipartition out;
    out.side_of.assign(n_orig, Side::A);
    for (size_t i = 0; i < original_ids.size(); ++i) out.side_of[original_ids[i]] = side_of[i];
    auto remap = [&](const std::vector<std::vector<int>>& src) {
        std::vector<std::vector<int>> dst;
        dst.reserve(src.size());
        for (const auto& c : src) {
            std::vector<int> nc;
            nc.reserve(c.size());
            for (int v : c) nc.push_back(original_ids[v]);
            dst.push_back(std::move(nc));
        }
        return dst;
    };
    out.a_clusters = remap(a_clusters);
    out.b_clusters = remap(b_clusters);
    out.normalize();
    return out;
}

Bipartition Bipartition::from_sides(const Graph& g, std::span<const Side> sides) {
    if (static_cast<int>(sides.size()) != g.order())
        throw BadCertificate("side assignment length does not match graph order");
    Bipartition out;
    out.side_of.assign(sides.begin(), sides.end());
    std::vector<int> av, bv;
    for (int v = 0; v < g.order(); ++v) (sides[v] == Side::A ? av : bv).push_back(v);
    auto da = cluster_decomposition(g, av);
    if (da.p3) throw BadCertificate("side A is not a cluster graph");
    auto db = cluster_decomposition(g, bv);
    if (db.p3) throw BadCertificate("side B is not a cluster graph");
    out.a_clusters = std::move(da.clusters);
    out.b_clusters = std::move(db.clusters);
    out.normalize();
    return out;
}

Bipartition Bipartition::from_sides_components(const Graph& g, std::span<const Side> sides) {
    if (static_cast<int>(sides.size()) != g.order())
        throw BadCertificate("side assignment length does not match graph order");
    Bipartition out;
    out.side_of.assign(sides.begin(), sides.end());
    std::vector<char> seen(g.order(), 0);
    std::vector<int> stack;
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::vector<int> comp{s};
        stack.assign(1, s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (seen[w] || sides[w] != sides[s]) continue;
                seen[w] = 1;
                comp.push_back(w);
                stack.push_back(w);
            }
        }
        (sides[s] == Side::A ? out.a_clusters : out.b_clusters).push_back(std::move(comp));
    }
    out.normalize();
    return out;
}

VerifyResult verify_certificate(const Graph& g, const Bipartition& cert, Problem problem, int k,
                                BoundMode mode) {
    auto fail = [](std::string why) { return VerifyResult{false, std::move(why)}; };
    int n = g.order();
    if (static_cast<int>(cert.side_of.size()) != n)
        return fail("side assignment length does not match graph order");

    // cluster index per vertex, offset so A and B indices never collide
    std::vector<int> cluster_of(n, -1);
    std::vector<int> cluster_size;
    auto index_side = [&](const std::vector<std::vector<int>>& clusters, Side s,
                          const char* label) -> VerifyResult {
        for (const auto& c : clusters) {
            int idx = static_cast<int>(cluster_size.size());
            cluster_size.push_back(static_cast<int>(c.size()));
            for (int v : c) {
                if (v < 0 || v >= n) return fail("cluster vertex out of range");
                if (cert.side_of[v] != s)
                    return fail(std::string("vertex in a cluster of side ") + label +
                                " but assigned to the other side");
                if (cluster_of[v] != -1) return fail("vertex appears in two clusters");
                cluster_of[v] = idx;
            }
        }
        return {};
    };
    if (auto r = index_side(cert.a_clusters, Side::A, "A"); !r.ok) return r;
    if (auto r = index_side(cert.b_clusters, Side::B, "B"); !r.ok) return r;
    for (int v = 0; v < n; ++v)
        if (cluster_of[v] == -1) return fail("vertex " + std::to_string(v) + " not covered");

    std::vector<int> internal_deg(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            if (cert.side_of[u] != cert.side_of[v]) continue;
            if (cluster_of[u] != cluster_of[v])
                return fail("edge between distinct clusters on the same side");
            ++internal_deg[u];
            ++internal_deg[v];
        }
    for (int v = 0; v < n; ++v)
        if (internal_deg[v] != cluster_size[cluster_of[v]] - 1)
            return fail("cluster containing vertex " + std::to_string(v) + " is not a clique");

    if (problem == Problem::monopolar)
        for (const auto& c : cert.b_clusters)
            if (c.size() > 1) return fail("side B is not edgeless");

    int count = mode == BoundMode::a_side ? cert.a_cluster_count()
                                          : cert.a_cluster_count() + cert.b_cluster_count();
    if (count > k)
        return fail("cluster count " + std::to_string(count) + " exceeds bound " +
                    std::to_string(k));
    return {};
}

} // namespace graphpart
