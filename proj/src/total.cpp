#include "graphpart/total.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>

#include "graphpart/errors.hpp"

namespace graphpart {

namespace {

// adjacency including dummies; dummies touch only real vertices
bool working_adjacent(const Graph& g, const TotalConstraint& c, int u, int v) {
    if (u > v) std::swap(u, v);
    int n = g.order();
    if (v < n) return g.adjacent(u, v);
    if (u >= n) return false;
    const auto& adj = c.dummy_adjacency[v - n];
    return std::binary_search(adj.begin(), adj.end(), u);
}

// how one remainder vertex relates to the committed clusters of each side
struct Profile {
    int a_hits = 0; // clusters with at least one neighbor
    int b_hits = 0;
    int a_index = -1; // the adjacent cluster when a_hits == 1
    int b_index = -1;
    bool a_partial = false; // adjacent to some but not all of a cluster
    bool b_partial = false;

    bool blocked_a() const { return a_hits >= 2 || a_partial; }
    bool blocked_b() const { return b_hits >= 2 || b_partial; }
};

Profile profile_of(const Graph& g, const TotalConstraint& c, int v) {
    Profile p;
    auto scan = [&](const std::vector<std::vector<int>>& clusters, int& hits, int& index,
                    bool& partial) {
        for (int i = 0; i < static_cast<int>(clusters.size()); ++i) {
            int cnt = 0;
            for (int w : clusters[i]) cnt += working_adjacent(g, c, v, w) ? 1 : 0;
            if (cnt == 0) continue;
            ++hits;
            index = i;
            if (cnt < static_cast<int>(clusters[i].size())) partial = true;
        }
    };
    scan(c.a_clusters, p.a_hits, p.a_index, p.a_partial);
    scan(c.b_clusters, p.b_hits, p.b_index, p.b_partial);
    return p;
}

TotalConstraint without_remainder(const TotalConstraint& c, int v) {
    TotalConstraint out = c;
    out.remainder.erase(std::lower_bound(out.remainder.begin(), out.remainder.end(), v));
    return out;
}

TotalConstraint opened(const TotalConstraint& c, int v, Side s) {
    TotalConstraint out = without_remainder(c, v);
    (s == Side::A ? out.a_clusters : out.b_clusters).push_back({v});
    return out;
}

TotalConstraint added(const TotalConstraint& c, int v, Side s, int index) {
    TotalConstraint out = without_remainder(c, v);
    auto& cl = (s == Side::A ? out.a_clusters : out.b_clusters)[index];
    cl.insert(std::lower_bound(cl.begin(), cl.end(), v), v);
    return out;
}

// fixed-size index subsets of {0..m-1} in lexicographic order
std::vector<std::vector<int>> sized_subsets(int m, int size) {
    std::vector<std::vector<int>> out;
    if (size == 0) {
        out.emplace_back();
        return out;
    }
    if (size > m) return out;
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        out.push_back(pick);
        int pos = size - 1;
        while (pos >= 0 && pick[pos] == m - size + pos) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (int q = pos + 1; q < size; ++q) pick[q] = pick[q - 1] + 1;
    }
    return out;
}

// one child of the dummy-opening rule: chosen classes become new clusters on
// the opposite side anchored by a dummy, the rest join their clusters now
TotalConstraint dummy_child(const Graph& g, const TotalConstraint& c, const std::vector<int>& ai,
                            const std::vector<int>& bj, const std::vector<int>& pick_a,
                            const std::vector<int>& pick_b,
                            const std::vector<std::vector<int>>& only_a,
                            const std::vector<std::vector<int>>& only_b) {
    TotalConstraint out = c;
    std::vector<char> chosen_a(c.a_clusters.size(), 0), chosen_b(c.b_clusters.size(), 0);
    for (int pos : pick_a) {
        int i = ai[pos];
        chosen_a[i] = 1;
        out.dummy_adjacency.push_back(only_a[i]);
        out.b_clusters.push_back({g.order() + out.dummy_count});
        ++out.dummy_count;
    }
    for (int pos : pick_b) {
        int j = bj[pos];
        chosen_b[j] = 1;
        out.dummy_adjacency.push_back(only_b[j]);
        out.a_clusters.push_back({g.order() + out.dummy_count});
        ++out.dummy_count;
    }
    std::vector<char> placed(g.order(), 0);
    for (int i : ai) {
        if (chosen_a[i]) continue;
        auto& cl = out.a_clusters[i];
        for (int v : only_a[i]) {
            cl.insert(std::lower_bound(cl.begin(), cl.end(), v), v);
            placed[v] = 1;
        }
    }
    for (int j : bj) {
        if (chosen_b[j]) continue;
        auto& cl = out.b_clusters[j];
        for (int v : only_b[j]) {
            cl.insert(std::lower_bound(cl.begin(), cl.end(), v), v);
            placed[v] = 1;
        }
    }
    out.remainder.erase(
        std::remove_if(out.remainder.begin(), out.remainder.end(), [&](int v) { return placed[v]; }),
        out.remainder.end());
    return out;
}

// (a-cluster, b-cluster) adjacency targets per remainder vertex, -1 if none
std::vector<std::pair<int, int>> classify(const Graph& g, const TotalConstraint& c) {
    std::vector<std::pair<int, int>> out;
    out.reserve(c.remainder.size());
    for (int v : c.remainder) {
        Profile p = profile_of(g, c, v);
        out.push_back({p.a_hits > 0 ? p.a_index : -1, p.b_hits > 0 ? p.b_index : -1});
    }
    return out;
}

} // namespace

TotalOutcome apply_total_rules(const Graph& g, const TotalConstraint& c, int k) {
    int k1 = static_cast<int>(c.a_clusters.size());
    int k2 = static_cast<int>(c.b_clusters.size());
    if (k1 + k2 > k) return {TotalOutcome::Kind::rejected, "bound-check", {}};

    std::vector<Profile> prof;
    prof.reserve(c.remainder.size());
    for (int v : c.remainder) prof.push_back(profile_of(g, c, v));

    // forced-remainder: a vertex barred from one side must resolve on the
    // other, by joining its unique fully-adjacent cluster or opening a new one
    for (size_t idx = 0; idx < c.remainder.size(); ++idx) {
        const Profile& p = prof[idx];
        bool ba = p.blocked_a(), bb = p.blocked_b();
        if (!ba && !bb) continue;
        if (ba && bb) return {TotalOutcome::Kind::rejected, "forced-remainder", {}};
        int v = c.remainder[idx];
        TotalOutcome out;
        out.kind = TotalOutcome::Kind::reduced;
        out.rule = "forced-remainder";
        if (ba)
            out.children.push_back(p.b_hits == 0 ? opened(c, v, Side::B)
                                                 : added(c, v, Side::B, p.b_index));
        else
            out.children.push_back(p.a_hits == 0 ? opened(c, v, Side::A)
                                                 : added(c, v, Side::A, p.a_index));
        return out;
    }

    // open-isolated: a vertex with no cluster contact starts a new cluster
    // on one side or the other
    for (size_t idx = 0; idx < c.remainder.size(); ++idx) {
        if (prof[idx].a_hits != 0 || prof[idx].b_hits != 0) continue;
        int v = c.remainder[idx];
        return {TotalOutcome::Kind::branch,
                "open-isolated",
                {opened(c, v, Side::A), opened(c, v, Side::B)}};
    }

    // every remainder vertex now touches one or two clusters, each fully;
    // group the single-sided ones by their cluster
    std::vector<std::vector<int>> only_a(k1), only_b(k2);
    for (size_t idx = 0; idx < c.remainder.size(); ++idx) {
        const Profile& p = prof[idx];
        if (p.a_hits > 0 && p.b_hits == 0) only_a[p.a_index].push_back(c.remainder[idx]);
        if (p.a_hits == 0 && p.b_hits > 0) only_b[p.b_index].push_back(c.remainder[idx]);
    }

    // split-nonadjacent: two nonadjacent vertices tied to the same cluster
    // cannot both join it; one must open a cluster on the opposite side
    for (int pass = 0; pass < 2; ++pass) {
        const auto& groups = pass == 0 ? only_a : only_b;
        Side opposite = pass == 0 ? Side::B : Side::A;
        for (const auto& members : groups)
            for (size_t x = 0; x < members.size(); ++x)
                for (size_t y = x + 1; y < members.size(); ++y)
                    if (!working_adjacent(g, c, members[x], members[y]))
                        return {TotalOutcome::Kind::branch,
                                "split-nonadjacent",
                                {opened(c, members[x], opposite), opened(c, members[y], opposite)}};
    }

    // split-adjacent: two adjacent vertices tied to different clusters of the
    // same side cannot both join them
    for (int pass = 0; pass < 2; ++pass) {
        const auto& groups = pass == 0 ? only_a : only_b;
        Side opposite = pass == 0 ? Side::B : Side::A;
        for (size_t i = 0; i < groups.size(); ++i)
            for (size_t i2 = i + 1; i2 < groups.size(); ++i2)
                for (int u : groups[i])
                    for (int v : groups[i2])
                        if (working_adjacent(g, c, u, v))
                            return {TotalOutcome::Kind::branch,
                                    "split-adjacent",
                                    {opened(c, u, opposite), opened(c, v, opposite)}};
    }

    // open-dummies: single-sided classes remain; guess which of them become
    // opposite-side clusters (anchored by a dummy so later vertices can still
    // join), the rest are committed to their clusters. Children are ordered
    // by total guess size, then by how many come from the A side, then
    // lexicographically within each side.
    std::vector<int> ai, bj;
    for (int i = 0; i < k1; ++i)
        if (!only_a[i].empty()) ai.push_back(i);
    for (int j = 0; j < k2; ++j)
        if (!only_b[j].empty()) bj.push_back(j);
    if (!ai.empty() || !bj.empty()) {
        int budget = k - k1 - k2;
        TotalOutcome out;
        out.kind = TotalOutcome::Kind::branch;
        out.rule = "open-dummies";
        for (int total = 0; total <= budget; ++total)
            for (int ta = 0; ta <= total; ++ta) {
                int tb = total - ta;
                if (ta > static_cast<int>(ai.size()) || tb > static_cast<int>(bj.size()))
                    continue;
                for (const auto& pick_a : sized_subsets(static_cast<int>(ai.size()), ta))
                    for (const auto& pick_b : sized_subsets(static_cast<int>(bj.size()), tb))
                        out.children.push_back(
                            dummy_child(g, c, ai, bj, pick_a, pick_b, only_a, only_b));
            }
        return out;
    }

    return {TotalOutcome::Kind::exhausted, "", {}};
}

TwoSatFormula build_twosat(const Graph& g, const TotalConstraint& c) {
    auto classes = classify(g, c);
    int r = static_cast<int>(c.remainder.size());
    for (const auto& [a_index, b_index] : classes)
        if (a_index == -1 || b_index == -1)
            throw UnclassifiedRemainder(
                "remainder vertex lacks a committed cluster on each side");

    TwoSatFormula f;
    f.var_count = r;
    int words = (r + 63) / 64;
    std::vector<uint64_t> bits(static_cast<size_t>(r) * words, 0);
    for (int x = 0; x < r; ++x)
        for (int y = x + 1; y < r; ++y)
            if (g.adjacent(c.remainder[x], c.remainder[y])) {
                bits[static_cast<size_t>(x) * words + y / 64] |= 1ull << (y % 64);
                bits[static_cast<size_t>(y) * words + x / 64] |= 1ull << (x % 64);
            }
    for (int x = 0; x < r; ++x)
        for (int y = x + 1; y < r; ++y) {
            bool adj = bits[static_cast<size_t>(x) * words + y / 64] >> (y % 64) & 1;
            auto [xa, xb] = classes[x];
            auto [ya, yb] = classes[y];
            // both on side A is impossible when their A targets differ and
            // they are adjacent, or match and they are not; same for side B
            if ((adj && xa != ya) || (!adj && xa == ya))
                f.clauses.push_back({{x, false}, {y, false}});
            if ((adj && xb != yb) || (!adj && xb == yb))
                f.clauses.push_back({{x, true}, {y, true}});
        }
    return f;
}

namespace {

std::optional<Bipartition> finish_leaf(const Graph& g, const TotalConstraint& c, int k,
                                       TotalStats* stats) {
    TwoSatFormula f = build_twosat(g, c);
    auto assignment = solve_twosat(f);
    if (!assignment) return std::nullopt;
    if (!evaluate_twosat(f, *assignment)) throw Error("2-SAT assignment failed its own formula");

    auto classes = classify(g, c);
    TotalConstraint filled = c;
    for (int x = 0; x < static_cast<int>(c.remainder.size()); ++x) {
        int v = c.remainder[x];
        auto [a_index, b_index] = classes[x];
        auto& cl = (*assignment)[x] ? filled.a_clusters[a_index] : filled.b_clusters[b_index];
        cl.insert(std::lower_bound(cl.begin(), cl.end(), v), v);
    }

    // dummies vanish from the answer; their clusters survive only through
    // real vertices that joined them
    Bipartition out;
    out.side_of.assign(g.order(), Side::B);
    auto emit = [&](std::vector<std::vector<int>>& src, std::vector<std::vector<int>>& dst,
                    Side s) {
        for (auto& cl : src) {
            cl.erase(std::remove_if(cl.begin(), cl.end(), [&](int u) { return u >= g.order(); }),
                     cl.end());
            if (cl.empty()) continue;
            if (s == Side::A)
                for (int u : cl) out.side_of[u] = Side::A;
            dst.push_back(std::move(cl));
        }
    };
    emit(filled.a_clusters, out.a_clusters, Side::A);
    emit(filled.b_clusters, out.b_clusters, Side::B);
    out.normalize();
    if (out.a_cluster_count() + out.b_cluster_count() > k) {
        if (stats) ++stats->recount_failures;
        return std::nullopt;
    }
    return out;
}

} // namespace

std::optional<Bipartition> recognize_subcoloring_total(const Graph& g, int k, TotalStats* stats) {
    if (k < 0) return std::nullopt;
    TotalConstraint root;
    root.remainder.resize(g.order());
    std::iota(root.remainder.begin(), root.remainder.end(), 0);

    struct Node {
        TotalConstraint c;
        int dummy_rounds;
    };
    std::vector<Node> stack;
    stack.push_back({std::move(root), 0});
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        if (stats) ++stats->nodes;
        TotalOutcome out = apply_total_rules(g, node.c, k);
        if (stats && !out.rule.empty()) ++stats->rule_applications[out.rule];
        switch (out.kind) {
        case TotalOutcome::Kind::rejected:
            if (stats) ++stats->leaves;
            break;
        case TotalOutcome::Kind::exhausted: {
            if (stats) {
                ++stats->leaves;
                ++stats->exhausted_leaves;
            }
            auto found = finish_leaf(g, node.c, k, stats);
            if (found) {
                if (stats) ++stats->satisfiable_leaves;
                return found;
            }
            break;
        }
        case TotalOutcome::Kind::reduced:
            stack.push_back({std::move(out.children.front()), node.dummy_rounds});
            break;
        case TotalOutcome::Kind::branch: {
            int rounds = node.dummy_rounds;
            if (out.rule == "open-dummies") {
                ++rounds;
                if (stats) {
                    stats->max_dummy_branches = std::max(
                        stats->max_dummy_branches, static_cast<long long>(out.children.size()));
                    if (rounds > 1) ++stats->dummy_rule_violations;
                }
            }
            for (auto it = out.children.rbegin(); it != out.children.rend(); ++it)
                stack.push_back({std::move(*it), rounds});
            break;
        }
        }
    }
    return std::nullopt;
}

} // namespace graphpart
