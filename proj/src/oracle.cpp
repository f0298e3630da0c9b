#include "graphpart/oracle.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "graphpart/errors.hpp"

namespace graphpart {

namespace {

int oracle_limit(int fallback) {
    if (const char* raw = std::getenv("GRAPHPART_ORACLE_LIMIT")) {
        try {
            int v = std::stoi(raw);
            if (v >= 0 && v <= 62) return v;
        } catch (...) {
            // ignore garbage, keep the built-in guard
        }
    }
    return fallback;
}

void check_order(const Graph& g, int fallback, const char* what) {
    int limit = oracle_limit(fallback);
    if (g.order() > limit)
        throw OracleSizeExceeded(std::string(what) + " oracle refuses order " +
                                 std::to_string(g.order()) + " (limit " + std::to_string(limit) +
                                 ")");
}

std::vector<std::uint64_t> adjacency_rows(const Graph& g) {
    std::vector<std::uint64_t> rows(g.order(), 0);
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u)) rows[u] |= std::uint64_t(1) << v;
    return rows;
}

bool edgeless_mask(const std::vector<std::uint64_t>& rows, std::uint64_t mask) {
    for (std::uint64_t m = mask; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (rows[v] & mask) return false;
    }
    return true;
}

// Number of connected components of the induced submask, or -1 when some
// component is not a clique.
int cluster_count_mask(const std::vector<std::uint64_t>& rows, std::uint64_t mask) {
    int count = 0;
    std::uint64_t left = mask;
    while (left) {
        int s = std::countr_zero(left);
        std::uint64_t comp = std::uint64_t(1) << s;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f;) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= rows[v] & mask;
            }
            frontier = next & ~comp;
            comp |= frontier;
        }
        for (std::uint64_t c = comp; c;) {
            int v = std::countr_zero(c);
            c &= c - 1;
            if ((rows[v] & mask) != (comp & ~(std::uint64_t(1) << v))) return -1;
        }
        ++count;
        left &= ~comp;
    }
    return count;
}

std::vector<Side> sides_of_mask(int n, std::uint64_t mask) {
    std::vector<Side> sides(n);
    for (int v = 0; v < n; ++v) sides[v] = (mask >> v & 1) ? Side::B : Side::A;
    return sides;
}

} // namespace

std::optional<Bipartition> brute_monopolar(const Graph& g, int k) {
    check_order(g, 24, "monopolar");
    if (k < 0) return std::nullopt;
    auto rows = adjacency_rows(g);
    int n = g.order();
    std::uint64_t all = n == 0 ? 0 : (std::uint64_t(1) << n) - 1;
    for (std::uint64_t mask = 0;; ++mask) {
        if (edgeless_mask(rows, mask)) {
            int ca = cluster_count_mask(rows, all & ~mask);
            if (ca >= 0 && ca <= k)
                return Bipartition::from_sides(g, sides_of_mask(n, mask));
        }
        if (mask == all) break;
    }
    return std::nullopt;
}

std::optional<Bipartition> brute_subcoloring(const Graph& g, int k, BoundMode mode) {
    check_order(g, 24, "subcoloring");
    if (k < 0) return std::nullopt;
    auto rows = adjacency_rows(g);
    int n = g.order();
    std::uint64_t all = n == 0 ? 0 : (std::uint64_t(1) << n) - 1;
    for (std::uint64_t mask = 0;; ++mask) {
        int ca = cluster_count_mask(rows, all & ~mask);
        if (ca >= 0) {
            int cb = cluster_count_mask(rows, mask);
            if (cb >= 0) {
                int counted = mode == BoundMode::a_side ? ca : ca + cb;
                if (counted <= k) return Bipartition::from_sides(g, sides_of_mask(n, mask));
            }
        }
        if (mask == all) break;
    }
    return std::nullopt;
}

std::optional<Bipartition> brute_pi_partition(const Graph& g, const PropertySpec& spec_a,
                                              const PropertySpec& spec_b) {
    check_order(g, 20, "property partition");
    auto rows = adjacency_rows(g);
    int n = g.order();
    std::uint64_t all = n == 0 ? 0 : (std::uint64_t(1) << n) - 1;
    std::vector<int> av, bv;
    for (std::uint64_t mask = 0;; ++mask) {
        av.clear();
        bv.clear();
        for (int v = 0; v < n; ++v) (mask >> v & 1 ? bv : av).push_back(v);
        if (spec_a.holds(g, av) && spec_b.holds(g, bv))
            return Bipartition::from_sides_components(g, sides_of_mask(n, mask));
        if (mask == all) break;
    }
    return std::nullopt;
}

std::optional<int> brute_monopolar_min_clusters(const Graph& g) {
    check_order(g, 24, "monopolar");
    auto rows = adjacency_rows(g);
    int n = g.order();
    std::uint64_t all = n == 0 ? 0 : (std::uint64_t(1) << n) - 1;
    std::optional<int> best;
    for (std::uint64_t mask = 0;; ++mask) {
        if (edgeless_mask(rows, mask)) {
            int ca = cluster_count_mask(rows, all & ~mask);
            if (ca >= 0 && (!best || ca < *best)) best = ca;
        }
        if (mask == all) break;
    }
    return best;
}

std::optional<int> brute_subcoloring_min_clusters(const Graph& g, BoundMode mode) {
    check_order(g, 24, "subcoloring");
    auto rows = adjacency_rows(g);
    int n = g.order();
    std::uint64_t all = n == 0 ? 0 : (std::uint64_t(1) << n) - 1;
    std::optional<int> best;
    for (std::uint64_t mask = 0;; ++mask) {
        int ca = cluster_count_mask(rows, all & ~mask);
        if (ca >= 0) {
            int cb = cluster_count_mask(rows, mask);
            if (cb >= 0) {
                int counted = mode == BoundMode::a_side ? ca : ca + cb;
                if (!best || counted < *best) best = counted;
            }
        }
        if (mask == all) break;
    }
    return best;
}

} // namespace graphpart
