#include "graphpart/exclusive.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "graphpart/errors.hpp"

namespace graphpart {

int ramsey_upper_bound(int r, int s) {
    if (r < 1 || s < 1) throw SpecMismatch("ramsey bound needs orders of at least 1");
    long long n = r + s - 2;
    long long t = std::min(r - 1, s - 1);
    __int128 acc = 1;
    for (long long i = 1; i <= t; ++i) {
        acc = acc * (n - t + i) / i;
        if (acc > std::numeric_limits<int>::max())
            throw BoundTooLarge("ramsey bound C(" + std::to_string(n) + "," + std::to_string(t) +
                                ") exceeds int range");
    }
    return static_cast<int>(acc);
}

namespace {

// Enumerates the subsets of {0..n-1} of size below d, increasing size then
// lexicographic, as sorted index vectors.
std::vector<std::vector<int>> small_subsets(int n, int d) {
    std::vector<std::vector<int>> out;
    out.push_back({});
    for (int t = 1; t < d && t <= n; ++t) {
        std::vector<int> idx(t);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            out.push_back(idx);
            int i = t - 1;
            while (i >= 0 && idx[i] == n - t + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

std::vector<int> sorted_copy(std::span<const int> xs) {
    std::vector<int> out(xs.begin(), xs.end());
    std::sort(out.begin(), out.end());
    return out;
}

void check_partition_of_rest(const Graph& g, int v, std::span<const int> a_prev,
                             std::span<const int> b_prev) {
    int n = g.order();
    if (v < 0 || v >= n) throw BadCertificate("new vertex out of range");
    std::vector<char> seen(n, 0);
    for (std::span<const int> side_set : {a_prev, b_prev})
        for (int u : side_set) {
            if (u < 0 || u >= n) throw BadCertificate("partition vertex out of range");
            if (u == v) throw BadCertificate("new vertex listed in the previous partition");
            if (seen[u]) throw BadCertificate("vertex listed twice in the previous partition");
            seen[u] = 1;
        }
    for (int u = 0; u < n; ++u)
        if (u != v && !seen[u])
            throw BadCertificate("previous partition misses vertex " + std::to_string(u));
}

Bipartition partition_from_a_side(const Graph& g, const std::vector<int>& a_side) {
    std::vector<Side> sides(g.order(), Side::B);
    for (int u : a_side) sides[u] = Side::A;
    return Bipartition::from_sides_components(g, sides);
}

} // namespace

std::optional<Bipartition> xp_inductive_step(const Graph& g, int v, std::span<const int> a_prev,
                                             std::span<const int> b_prev,
                                             const PropertySpec& spec_a,
                                             const PropertySpec& spec_b, int d,
                                             long long budget) {
    if (d < 1) throw SpecMismatch("exclusivity order must be at least 1");
    check_partition_of_rest(g, v, a_prev, b_prev);
    std::vector<int> a_sorted = sorted_copy(a_prev);
    std::vector<int> b_sorted = sorted_copy(b_prev);
    if (!spec_a.holds(g, a_sorted) || !spec_b.holds(g, b_sorted))
        throw BadCertificate("previous partition does not satisfy the properties");

    auto a_subsets = small_subsets(static_cast<int>(a_sorted.size()), d);
    auto b_subsets = small_subsets(static_cast<int>(b_sorted.size()), d);
    long long pairs = 0;
    for (const auto& a_pick : a_subsets) {
        for (const auto& b_pick : b_subsets) {
            if (++pairs > budget)
                throw BudgetExceeded("subset pair budget exhausted after " +
                                     std::to_string(budget) + " pairs");
            // base: A' minus the moved subset, B' minus the moved subset
            std::vector<int> base_a, base_b;
            base_a.reserve(a_sorted.size());
            base_b.reserve(b_sorted.size());
            {
                size_t next = 0;
                for (size_t i = 0; i < a_sorted.size(); ++i) {
                    if (next < a_pick.size() && static_cast<int>(i) == a_pick[next])
                        ++next;
                    else
                        base_a.push_back(a_sorted[i]);
                }
                next = 0;
                for (size_t i = 0; i < b_sorted.size(); ++i) {
                    if (next < b_pick.size() && static_cast<int>(i) == b_pick[next])
                        ++next;
                    else
                        base_b.push_back(b_sorted[i]);
                }
            }
            std::vector<int> cand_a = base_a;
            for (int i : b_pick) cand_a.push_back(b_sorted[i]);
            std::vector<int> cand_b = base_b;
            for (int i : a_pick) cand_b.push_back(a_sorted[i]);
            std::sort(cand_a.begin(), cand_a.end());
            std::sort(cand_b.begin(), cand_b.end());

            // v on the A side first, then v on the B side
            std::vector<int> with_v = cand_a;
            with_v.insert(std::lower_bound(with_v.begin(), with_v.end(), v), v);
            if (spec_a.holds(g, with_v) && spec_b.holds(g, cand_b))
                return partition_from_a_side(g, with_v);
            with_v = cand_b;
            with_v.insert(std::lower_bound(with_v.begin(), with_v.end(), v), v);
            if (spec_a.holds(g, cand_a) && spec_b.holds(g, with_v))
                return partition_from_a_side(g, cand_a);
        }
    }
    return std::nullopt;
}

namespace {

class XpEngine final : public InductiveRecognizer {
public:
    XpEngine(const PropertySpec& spec_a, const PropertySpec& spec_b, int d, long long budget)
        : spec_a_(spec_a), spec_b_(spec_b), d_(d), budget_(budget) {}

    void begin(const Graph& reordered, int) override {
        full_ = &reordered;
        a_side_.clear();
        b_side_.clear();
    }

    bool step(const PrefixView& view, int new_vertex) override {
        std::vector<int> prefix_ids(view.size());
        std::iota(prefix_ids.begin(), prefix_ids.end(), 0);
        Graph prefix = full_->induced(prefix_ids);
        auto found =
            xp_inductive_step(prefix, new_vertex, a_side_, b_side_, spec_a_, spec_b_, d_, budget_);
        if (!found) return false;
        a_side_ = found->a_vertices();
        b_side_ = found->b_vertices();
        return true;
    }

    Bipartition certificate() const override {
        std::vector<Side> sides(full_->order(), Side::B);
        for (int u : a_side_) sides[u] = Side::A;
        return Bipartition::from_sides_components(*full_, sides);
    }

private:
    const PropertySpec& spec_a_;
    const PropertySpec& spec_b_;
    int d_;
    long long budget_;
    const Graph* full_ = nullptr;
    std::vector<int> a_side_, b_side_;
};

} // namespace

std::optional<Bipartition> recognize_exclusive(const Graph& g, const PropertySpec& spec_a,
                                               const PropertySpec& spec_b, int d,
                                               DriverStats* stats, long long budget) {
    if (d < 1) throw SpecMismatch("exclusivity order must be at least 1");
    XpEngine engine(spec_a, spec_b, d, budget);
    return recognize_inductively(g, 0, engine, OrderMode::input, stats);
}

// ---------------------------------------------------------------------------
// Forbidden-subgraph search trees.

namespace {

// Step-start snapshot: sides of the already-partitioned prefix, with the
// incoming vertex carried through the permanent sets only.
struct FsgState {
    const Graph* g = nullptr;
    int v = -1;
    std::vector<Side> side;
};

struct FsgNode {
    std::vector<int> a_perm, b_perm;
    int a_apps = 0;
    int b_apps = 0;
};

bool node_has(const std::vector<int>& xs, int u) {
    return std::find(xs.begin(), xs.end(), u) != xs.end();
}

bool in_a_star(const FsgState& s, const FsgNode& n, int u) {
    return u != s.v && s.side[u] == Side::A && !node_has(n.a_perm, u) && !node_has(n.b_perm, u);
}

std::vector<int> side_vertices(const FsgState& s, const FsgNode& n, Side which) {
    std::vector<int> out;
    for (int u = 0; u < s.g->order(); ++u) {
        bool a = node_has(n.a_perm, u) ||
                 (u != s.v && s.side[u] == Side::A && !node_has(n.b_perm, u));
        if ((which == Side::A) == a) out.push_back(u);
    }
    return out;
}

enum class FsgMode { cluster_vs_patterns, patterns_vs_patterns };

struct FsgRules {
    FsgMode mode;
    int k = 0; // cluster bound, cluster mode only
    const PropertySpec* spec_a = nullptr; // pattern mode only
    const PropertySpec* spec_b = nullptr;
    long long a_cap = 0;
    long long b_cap = 0;
};

struct FsgOutcome {
    enum class Kind { rejected, reduced, branch, exhausted };
    Kind kind = Kind::exhausted;
    const char* rule = "";
    bool counts_a = false; // whether the application charges the A-side cap
    bool counts_b = false;
    std::vector<FsgNode> children;
};

// First forbidden occurrence on one side, patterns tried in list order.
std::optional<std::vector<int>> first_occurrence(const Graph& g,
                                                 const std::vector<PatternGraph>& patterns,
                                                 std::span<const int> within) {
    for (const auto& h : patterns)
        if (auto occ = find_induced_occurrence(g, h, within)) return occ;
    return std::nullopt;
}

FsgOutcome apply_fsg_rules(const FsgState& s, const FsgRules& r, const FsgNode& node) {
    const Graph& g = *s.g;

    // permanent-check on both permanent sets
    {
        bool bad = false;
        std::vector<int> ap = node.a_perm;
        std::sort(ap.begin(), ap.end());
        if (r.mode == FsgMode::cluster_vs_patterns) {
            auto dec = cluster_decomposition(g, ap);
            bad = dec.p3.has_value() || static_cast<int>(dec.clusters.size()) > r.k;
        } else {
            bad = !r.spec_a->holds(g, ap);
        }
        if (!bad) {
            std::vector<int> bp = node.b_perm;
            std::sort(bp.begin(), bp.end());
            bad = !r.spec_b->holds(g, bp);
        }
        if (bad) return {FsgOutcome::Kind::rejected, "permanent-check", false, false, {}};
    }

    if (r.mode == FsgMode::cluster_vs_patterns) {
        std::vector<int> perm_sorted = node.a_perm;
        std::sort(perm_sorted.begin(), perm_sorted.end());

        // forced-to-b: movable A vertex in an induced path with two
        // permanent A vertices
        for (int u = 0; u < g.order(); ++u) {
            if (!in_a_star(s, node, u)) continue;
            bool hit = false;
            for (size_t i = 0; i < perm_sorted.size() && !hit; ++i)
                for (size_t j = i + 1; j < perm_sorted.size() && !hit; ++j) {
                    int w = perm_sorted[i], x = perm_sorted[j];
                    int deg = int(g.adjacent(u, w)) + int(g.adjacent(u, x)) +
                              int(g.adjacent(w, x));
                    if (deg == 2 && !(g.adjacent(u, w) && g.adjacent(u, x) && g.adjacent(w, x)))
                        hit = true;
                }
            if (hit) {
                FsgNode child = node;
                child.b_perm.push_back(u);
                child.a_apps = node.a_apps + 1;
                FsgOutcome out{FsgOutcome::Kind::reduced, "forced-to-b", true, false, {}};
                out.children.push_back(std::move(child));
                return out;
            }
        }

        // p3-pair-branch: two movable A vertices in an induced path with a
        // permanent A vertex; either may be the one to leave
        for (int x : perm_sorted) {
            int n1 = -1;
            for (int u = 0; u < g.order(); ++u)
                if (in_a_star(s, node, u) && g.adjacent(u, x)) {
                    n1 = u;
                    break;
                }
            if (n1 == -1) continue;
            int partner = -1;
            for (int w = 0; w < g.order(); ++w)
                if (w != n1 && in_a_star(s, node, w) && g.adjacent(w, x) && !g.adjacent(w, n1)) {
                    partner = w;
                    break;
                }
            if (partner == -1)
                for (int w = 0; w < g.order(); ++w)
                    if (w != n1 && in_a_star(s, node, w) && g.adjacent(w, n1) &&
                        !g.adjacent(w, x)) {
                        partner = w;
                        break;
                    }
            if (partner == -1) continue;
            FsgOutcome out{FsgOutcome::Kind::branch, "p3-pair-branch", true, false, {}};
            FsgNode c1 = node;
            c1.b_perm.push_back(n1);
            c1.a_apps = node.a_apps + 1;
            FsgNode c2 = node;
            c2.b_perm.push_back(partner);
            c2.a_apps = node.a_apps + 1;
            out.children.push_back(std::move(c1));
            out.children.push_back(std::move(c2));
            return out;
        }
    } else {
        // forbidden-a-branch: occurrence of a forbidden pattern on the A
        // side; every movable member is a candidate to leave
        auto a_side = side_vertices(s, node, Side::A);
        if (auto occ = first_occurrence(g, *r.spec_a->forbidden, a_side)) {
            std::vector<int> movable;
            for (int u : *occ)
                if (!node_has(node.a_perm, u)) movable.push_back(u);
            std::sort(movable.begin(), movable.end());
            FsgOutcome out{FsgOutcome::Kind::branch, "forbidden-a-branch", true, false, {}};
            for (int u : movable) {
                FsgNode child = node;
                child.b_perm.push_back(u);
                child.a_apps = node.a_apps + 1;
                out.children.push_back(std::move(child));
            }
            if (out.children.empty())
                return {FsgOutcome::Kind::rejected, "forbidden-a-branch", true, false, {}};
            if (out.children.size() == 1) out.kind = FsgOutcome::Kind::reduced;
            return out;
        }
    }

    // forbidden-b-branch: occurrence of a forbidden pattern on the B side
    {
        auto b_side = side_vertices(s, node, Side::B);
        if (auto occ = first_occurrence(g, *r.spec_b->forbidden, b_side)) {
            std::vector<int> movable;
            for (int u : *occ)
                if (!node_has(node.b_perm, u)) movable.push_back(u);
            std::sort(movable.begin(), movable.end());
            FsgOutcome out{FsgOutcome::Kind::branch, "forbidden-b-branch", false, true, {}};
            for (int u : movable) {
                FsgNode child = node;
                child.a_perm.push_back(u);
                child.b_apps = node.b_apps + 1;
                out.children.push_back(std::move(child));
            }
            if (out.children.empty())
                return {FsgOutcome::Kind::rejected, "forbidden-b-branch", false, true, {}};
            if (out.children.size() == 1) out.kind = FsgOutcome::Kind::reduced;
            return out;
        }
    }

    // cluster-count-branch: the A side is now a cluster graph; when it has
    // too many clusters, some cluster without permanent vertices must shed
    // its lowest vertex or keep it for good
    if (r.mode == FsgMode::cluster_vs_patterns) {
        auto a_side = side_vertices(s, node, Side::A);
        auto dec = cluster_decomposition(g, a_side);
        if (dec.p3)
            throw Error("cluster-count-branch reached with a non-cluster A side");
        if (static_cast<int>(dec.clusters.size()) > r.k) {
            int pick = -1;
            for (const auto& members : dec.clusters) {
                bool has_perm = false;
                for (int u : members)
                    if (node_has(node.a_perm, u)) {
                        has_perm = true;
                        break;
                    }
                if (!has_perm && (pick == -1 || members[0] < pick)) pick = members[0];
            }
            if (pick == -1)
                return {FsgOutcome::Kind::rejected, "cluster-count-branch", true, false, {}};
            FsgOutcome out{FsgOutcome::Kind::branch, "cluster-count-branch", true, false, {}};
            FsgNode c1 = node;
            c1.a_perm.push_back(pick);
            c1.a_apps = node.a_apps + 1;
            FsgNode c2 = node;
            c2.b_perm.push_back(pick);
            c2.a_apps = node.a_apps + 1;
            out.children.push_back(std::move(c1));
            out.children.push_back(std::move(c2));
            return out;
        }
    }

    return {FsgOutcome::Kind::exhausted, "", false, false, {}};
}

// Depth-first search; exhausted leaves are always accepted.
std::optional<FsgNode> run_fsg_tree(const FsgState& s, const FsgRules& r, FsgStats* st) {
    std::vector<FsgNode> stack;
    stack.push_back({{}, {s.v}, 0, 0});
    stack.push_back({{s.v}, {}, 0, 0});
    while (!stack.empty()) {
        FsgNode node = std::move(stack.back());
        stack.pop_back();
        if (st) {
            ++st->nodes;
            st->max_a_applications_per_path =
                std::max<long long>(st->max_a_applications_per_path, node.a_apps);
            st->max_b_branchings_per_path =
                std::max<long long>(st->max_b_branchings_per_path, node.b_apps);
            if (node.a_apps > r.a_cap || node.b_apps > r.b_cap) ++st->cap_violations;
        }
        FsgOutcome out = apply_fsg_rules(s, r, node);
        switch (out.kind) {
        case FsgOutcome::Kind::rejected:
            if (st) ++st->leaves;
            break;
        case FsgOutcome::Kind::reduced:
        case FsgOutcome::Kind::branch:
            for (auto it = out.children.rbegin(); it != out.children.rend(); ++it)
                stack.push_back(std::move(*it));
            break;
        case FsgOutcome::Kind::exhausted:
            if (st) {
                ++st->leaves;
                ++st->exhausted_leaves;
            }
            return node;
        }
    }
    return std::nullopt;
}

class FsgEngine final : public InductiveRecognizer {
public:
    FsgEngine(FsgRules rules, FsgStats* stats) : rules_(rules), stats_(stats) {}

    void begin(const Graph& reordered, int) override {
        full_ = &reordered;
        sides_.assign(reordered.order(), Side::B);
    }

    bool step(const PrefixView& view, int new_vertex) override {
        std::vector<int> prefix_ids(view.size());
        std::iota(prefix_ids.begin(), prefix_ids.end(), 0);
        Graph prefix = full_->induced(prefix_ids);
        FsgState state;
        state.g = &prefix;
        state.v = new_vertex;
        state.side.assign(sides_.begin(), sides_.begin() + view.size());
        if (stats_) ++stats_->steps;
        auto leaf = run_fsg_tree(state, rules_, stats_);
        if (!leaf) return false;
        for (int u : side_vertices(state, *leaf, Side::A)) sides_[u] = Side::A;
        for (int u : side_vertices(state, *leaf, Side::B)) sides_[u] = Side::B;
        return true;
    }

    Bipartition certificate() const override {
        return Bipartition::from_sides_components(*full_, sides_);
    }

private:
    FsgRules rules_;
    FsgStats* stats_;
    const Graph* full_ = nullptr;
    std::vector<Side> sides_;
};

} // namespace

std::optional<Bipartition> recognize_cluster_vs_fsg(const Graph& g, int k,
                                                    const PropertySpec& spec_b,
                                                    FsgStats* stats) {
    if (!spec_b.forbidden)
        throw SpecMismatch("'" + spec_b.name + "' has no forbidden-subgraph list");
    int s = -1;
    for (const auto& h : *spec_b.forbidden)
        if (h.is_clique() && (s == -1 || h.order() < s)) s = h.order();
    if (s == -1)
        throw SpecMismatch("'" + spec_b.name + "' forbids no clique; branch caps undefined");
    if (k < 0) return std::nullopt;

    FsgRules rules;
    rules.mode = FsgMode::cluster_vs_patterns;
    rules.k = k;
    rules.spec_b = &spec_b;
    rules.a_cap = static_cast<long long>(k) + static_cast<long long>(s - 1) * k + 2;
    rules.b_cap = static_cast<long long>(s - 1) * k + 1;
    if (stats) {
        stats->a_application_cap = rules.a_cap;
        stats->b_branch_cap = rules.b_cap;
    }
    FsgEngine engine(rules, stats);
    DriverStats driver;
    auto out = recognize_inductively(g, k, engine, OrderMode::degree_sorted, &driver);
    if (stats) stats->failed_prefix = driver.failed_prefix;
    return out;
}

std::optional<Bipartition> recognize_small_fsg(const Graph& g, const PropertySpec& spec_a,
                                               const PropertySpec& spec_b, FsgStats* stats) {
    if (!spec_a.forbidden)
        throw SpecMismatch("'" + spec_a.name + "' has no forbidden-subgraph list");
    if (!spec_b.forbidden)
        throw SpecMismatch("'" + spec_b.name + "' has no forbidden-subgraph list");
    if (!spec_a.excluded_edgeless_order || !spec_b.excluded_clique_order)
        throw SpecMismatch("specs lack the excluded edgeless/clique orders for path caps");

    FsgRules rules;
    rules.mode = FsgMode::patterns_vs_patterns;
    rules.spec_a = &spec_a;
    rules.spec_b = &spec_b;
    long long cap =
        ramsey_upper_bound(*spec_a.excluded_edgeless_order, *spec_b.excluded_clique_order);
    rules.a_cap = cap;
    rules.b_cap = cap;
    if (stats) {
        stats->a_application_cap = cap;
        stats->b_branch_cap = cap;
    }
    FsgEngine engine(rules, stats);
    DriverStats driver;
    auto out = recognize_inductively(g, 0, engine, OrderMode::degree_sorted, &driver);
    if (stats) stats->failed_prefix = driver.failed_prefix;
    return out;
}

std::optional<Bipartition> recognize_bounded_a(const Graph& g, int k, const PropertySpec& spec_a,
                                               const PropertySpec& spec_b) {
    if (!spec_b.forbidden)
        throw SpecMismatch("'" + spec_b.name + "' has no forbidden-subgraph list");
    if (k < 0) return std::nullopt;

    std::vector<std::vector<int>> stack;
    stack.push_back({});
    while (!stack.empty()) {
        std::vector<int> a_side = std::move(stack.back());
        stack.pop_back();
        if (static_cast<int>(a_side.size()) > k) continue;
        if (!spec_a.holds(g, a_side)) continue;
        std::vector<int> b_side;
        {
            std::vector<char> in_a(g.order(), 0);
            for (int u : a_side) in_a[u] = 1;
            for (int u = 0; u < g.order(); ++u)
                if (!in_a[u]) b_side.push_back(u);
        }
        auto occ = first_occurrence(g, *spec_b.forbidden, b_side);
        if (!occ) {
            std::vector<Side> sides(g.order(), Side::B);
            for (int u : a_side) sides[u] = Side::A;
            return Bipartition::from_sides_components(g, sides);
        }
        std::vector<int> moves = *occ;
        std::sort(moves.begin(), moves.end());
        for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
            std::vector<int> child = a_side;
            child.insert(std::lower_bound(child.begin(), child.end(), *it), *it);
            stack.push_back(std::move(child));
        }
    }
    return std::nullopt;
}

} // namespace graphpart
