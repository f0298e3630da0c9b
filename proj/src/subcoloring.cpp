#include "graphpart/subcoloring.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "graphpart/errors.hpp"

namespace graphpart {

namespace {

void sorted_insert(std::vector<int>& xs, int u) {
    xs.insert(std::lower_bound(xs.begin(), xs.end(), u), u);
}

void sorted_erase(std::vector<int>& xs, int u) {
    xs.erase(std::lower_bound(xs.begin(), xs.end(), u));
}

// per-vertex location tags, rebuilt per rule scan
struct Locator {
    std::vector<Side> side;
    std::vector<int> group;
    std::vector<char> perm;
};

Locator locate(const Graph& g, const GroupConstraint& c) {
    Locator loc;
    loc.side.assign(g.order(), Side::A);
    loc.group.assign(g.order(), -1);
    loc.perm.assign(g.order(), 0);
    for (int i = 0; i < static_cast<int>(c.a_groups.size()); ++i)
        for (int u : c.a_groups[i]) {
            loc.side[u] = Side::A;
            loc.group[u] = i;
        }
    for (int j = 0; j < static_cast<int>(c.b_groups.size()); ++j)
        for (int u : c.b_groups[j]) {
            loc.side[u] = Side::B;
            loc.group[u] = j;
        }
    for (int u : c.a_perm) loc.perm[u] = 1;
    for (int u : c.b_perm) loc.perm[u] = 1;
    return loc;
}

GroupConstraint moved_to_b(const GroupConstraint& c, const Locator& loc, int u, int j) {
    GroupConstraint child = c;
    sorted_erase(child.a_groups[loc.group[u]], u);
    if (j == static_cast<int>(child.b_groups.size())) child.b_groups.emplace_back();
    sorted_insert(child.b_groups[j], u);
    child.b_perm.push_back(u);
    return child;
}

GroupConstraint moved_to_a(const GroupConstraint& c, const Locator& loc, int u, int j) {
    GroupConstraint child = c;
    sorted_erase(child.b_groups[loc.group[u]], u);
    sorted_insert(child.a_groups[j], u);
    child.a_perm.push_back(u);
    return child;
}

// The switched vertex leaves its side for good. A permanent neighbor on the
// target side forces the destination group; otherwise every admissible
// target group becomes a child. A vertex leaving the B side with no
// permanent-free A group to land in kills the constraint.
SubOutcome resolve_switch(const Graph& g, const GroupConstraint& c, const Locator& loc, int u,
                          std::string selector) {
    SubOutcome out;
    out.rule = std::move(selector);
    if (loc.side[u] == Side::A) {
        for (int w : g.neighbors(u))
            if (loc.perm[w] && loc.side[w] == Side::B) {
                out.kind = SubOutcome::Kind::reduced;
                out.children.push_back(moved_to_b(c, loc, u, loc.group[w]));
                return out;
            }
        std::vector<char> has_neighbor(c.b_groups.size(), 0), has_perm(c.b_groups.size(), 0);
        for (int w : g.neighbors(u))
            if (loc.side[w] == Side::B) has_neighbor[loc.group[w]] = 1;
        for (int w : c.b_perm) has_perm[loc.group[w]] = 1;
        std::vector<int> targets;
        for (int j = 0; j < static_cast<int>(c.b_groups.size()); ++j)
            if (has_neighbor[j] && !has_perm[j]) targets.push_back(j);
        int fresh = static_cast<int>(c.b_groups.size());
        for (int j = 0; j < static_cast<int>(c.b_groups.size()); ++j)
            if (c.b_groups[j].empty()) {
                fresh = j;
                break;
            }
        targets.push_back(fresh);
        std::sort(targets.begin(), targets.end());
        out.kind = SubOutcome::Kind::branch;
        for (int j : targets) out.children.push_back(moved_to_b(c, loc, u, j));
        return out;
    }
    for (int w : g.neighbors(u))
        if (loc.perm[w] && loc.side[w] == Side::A) {
            out.kind = SubOutcome::Kind::reduced;
            out.children.push_back(moved_to_a(c, loc, u, loc.group[w]));
            return out;
        }
    std::vector<char> has_perm(c.a_groups.size(), 0);
    for (int w : c.a_perm) has_perm[loc.group[w]] = 1;
    out.kind = SubOutcome::Kind::branch;
    for (int j = 0; j < static_cast<int>(c.a_groups.size()); ++j)
        if (!has_perm[j]) out.children.push_back(moved_to_a(c, loc, u, j));
    if (out.children.empty()) out.kind = SubOutcome::Kind::rejected;
    return out;
}

} // namespace

SubOutcome apply_sub_rules(const Graph& g, const GroupConstraint& c, int k) {
    Locator loc = locate(g, c);
    std::vector<std::vector<int>> perm_in_a_group(c.a_groups.size());
    for (int u : c.a_perm) perm_in_a_group[loc.group[u]].push_back(u);
    std::vector<std::vector<int>> perm_in_b_group(c.b_groups.size());
    for (int u : c.b_perm) perm_in_b_group[loc.group[u]].push_back(u);

    // permanent-check: permanent vertices sharing a group must form a
    // clique, and permanent vertices of distinct groups on the same side
    // must be nonadjacent; either failure makes the constraint unfulfillable
    for (const auto* per_group : {&perm_in_a_group, &perm_in_b_group})
        for (const auto& members : *per_group)
            for (size_t x = 0; x < members.size(); ++x)
                for (size_t y = x + 1; y < members.size(); ++y)
                    if (!g.adjacent(members[x], members[y]))
                        return {SubOutcome::Kind::rejected, "permanent-check", {}};
    for (const auto* perm : {&c.a_perm, &c.b_perm})
        for (int u : *perm)
            for (int w : g.neighbors(u))
                if (loc.perm[w] && loc.side[w] == loc.side[u] && loc.group[w] != loc.group[u])
                    return {SubOutcome::Kind::rejected, "permanent-check", {}};

    // make-permanent: an A-side vertex with neighbors in more than k+1
    // B groups cannot sit on the B side of any completion, so pin it
    std::vector<int> stamp(c.b_groups.size(), -1);
    for (int u = 0; u < g.order(); ++u) {
        if (loc.perm[u] || loc.side[u] != Side::A) continue;
        int distinct = 0;
        for (int w : g.neighbors(u)) {
            if (loc.side[w] != Side::B) continue;
            int j = loc.group[w];
            if (stamp[j] != u) {
                stamp[j] = u;
                ++distinct;
            }
        }
        if (distinct > k + 1) {
            SubOutcome out;
            out.kind = SubOutcome::Kind::reduced;
            out.rule = "make-permanent";
            GroupConstraint child = c;
            child.a_perm.push_back(u);
            out.children.push_back(std::move(child));
            return out;
        }
    }

    // switch-nonadjacent: a movable vertex missing an edge to a permanent
    // vertex of its own group cannot stay
    for (int u = 0; u < g.order(); ++u) {
        if (loc.perm[u]) continue;
        const auto& anchors = loc.side[u] == Side::A ? perm_in_a_group[loc.group[u]]
                                                     : perm_in_b_group[loc.group[u]];
        for (int p : anchors)
            if (!g.adjacent(u, p)) return resolve_switch(g, c, loc, u, "switch-nonadjacent");
    }

    // switch-foreign-permanent: a movable vertex adjacent to a permanent
    // vertex of another group on its side cannot stay either
    for (int u = 0; u < g.order(); ++u) {
        if (loc.perm[u]) continue;
        for (int w : g.neighbors(u))
            if (loc.perm[w] && loc.side[w] == loc.side[u] && loc.group[w] != loc.group[u])
                return resolve_switch(g, c, loc, u, "switch-foreign-permanent");
    }

    return {SubOutcome::Kind::exhausted, "", {}};
}

std::vector<GroupConstraint> initial_group_constraints(
    const Graph& g, int v, const std::vector<std::vector<int>>& a_clusters,
    const std::vector<std::vector<int>>& b_clusters, int k) {
    int n = g.order();
    if (v < 0 || v >= n) throw BadCertificate("grown vertex out of range");
    if (k < 0) throw BadCertificate("negative cluster bound");

    // validate and normalize: clusters must partition V minus v into cliques
    // with no edges between clusters of the same side
    std::vector<int> tag(n, -1);
    std::vector<int> tag_size;
    std::vector<std::vector<int>> base_a, base_b;
    auto adopt = [&](const std::vector<std::vector<int>>& src, std::vector<std::vector<int>>& dst) {
        for (const auto& cl : src) {
            if (cl.empty()) continue;
            std::vector<int> members = cl;
            std::sort(members.begin(), members.end());
            int idx = static_cast<int>(tag_size.size());
            tag_size.push_back(static_cast<int>(members.size()));
            for (int u : members) {
                if (u < 0 || u >= n) throw BadCertificate("cluster vertex out of range");
                if (u == v) throw BadCertificate("grown vertex already placed");
                if (tag[u] != -1) throw BadCertificate("vertex appears in two clusters");
                tag[u] = idx;
            }
            dst.push_back(std::move(members));
        }
    };
    adopt(a_clusters, base_a);
    int a_count = static_cast<int>(base_a.size());
    adopt(b_clusters, base_b);
    if (a_count > k) throw BadCertificate("more than k clusters on side A");
    for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        if (tag[u] == -1) throw BadCertificate("vertex " + std::to_string(u) + " not covered");
        int internal = 0;
        for (int w : g.neighbors(u)) {
            if (w == v || tag[w] == -1) continue;
            if (tag[w] == tag[u]) {
                ++internal;
            } else if ((tag[w] < a_count) == (tag[u] < a_count)) {
                throw BadCertificate("edge between distinct clusters on the same side");
            }
        }
        if (internal != tag_size[tag[u]] - 1)
            throw BadCertificate("cluster containing vertex " + std::to_string(u) +
                                 " is not a clique");
    }
    base_a.resize(k);

    // B clusters holding neighbors of v come first; v may only join one of
    // those or a fresh empty group
    std::vector<char> v_adj(n, 0);
    for (int w : g.neighbors(v)) v_adj[w] = 1;
    auto mid = std::stable_partition(base_b.begin(), base_b.end(), [&](const std::vector<int>& cl) {
        return std::any_of(cl.begin(), cl.end(), [&](int u) { return v_adj[u] != 0; });
    });
    int lead = static_cast<int>(mid - base_b.begin());

    std::vector<GroupConstraint> out;
    for (int j = 0; j < k; ++j) {
        GroupConstraint c{base_a, base_b, {v}, {}};
        sorted_insert(c.a_groups[j], v);
        out.push_back(std::move(c));
    }
    // with neighbors in more than k+1 of the B clusters, v cannot sit on
    // the B side at all
    if (lead <= k + 1) {
        for (int j = 0; j < lead; ++j) {
            GroupConstraint c{base_a, base_b, {}, {v}};
            sorted_insert(c.b_groups[j], v);
            out.push_back(std::move(c));
        }
        GroupConstraint c{base_a, base_b, {}, {v}};
        c.b_groups.push_back({v});
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

struct SubPathNode {
    GroupConstraint c;
    int a_branchings = 0; // switch branchings that moved a vertex off side A
    int b_branchings = 0;
};

Bipartition partition_from_groups(const GroupConstraint& c, int n) {
    Bipartition out;
    out.side_of.assign(n, Side::B);
    for (const auto& grp : c.a_groups)
        for (int u : grp) out.side_of[u] = Side::A;
    for (const auto& grp : c.a_groups)
        if (!grp.empty()) out.a_clusters.push_back(grp);
    for (const auto& grp : c.b_groups)
        if (!grp.empty()) out.b_clusters.push_back(grp);
    out.normalize();
    return out;
}

} // namespace

std::optional<Bipartition> inductive_subcoloring_step(
    const Graph& g, int v, const std::vector<std::vector<int>>& a_clusters,
    const std::vector<std::vector<int>>& b_clusters, int k, SubStats* stats) {
    auto roots = initial_group_constraints(g, v, a_clusters, b_clusters, k);
    if (stats) {
        ++stats->steps;
        stats->max_initial_constraints =
            std::max(stats->max_initial_constraints, static_cast<int>(roots.size()));
        if (static_cast<int>(roots.size()) > 2 * k + 2) ++stats->initial_cap_violations;
    }

    std::vector<SubPathNode> stack;
    for (auto it = roots.rbegin(); it != roots.rend(); ++it)
        stack.push_back({std::move(*it), 0, 0});
    while (!stack.empty()) {
        SubPathNode node = std::move(stack.back());
        stack.pop_back();
        if (stats) ++stats->nodes;
        SubOutcome out = apply_sub_rules(g, node.c, k);
        if (stats && !out.rule.empty()) {
            ++stats->rule_applications[out.rule];
            if (out.rule != "permanent-check" && out.rule != "make-permanent") {
                const char* resolution = out.kind == SubOutcome::Kind::reduced   ? "switch-reduce"
                                         : out.kind == SubOutcome::Kind::branch ? "switch-branch"
                                                                                : "switch-reject";
                ++stats->rule_applications[resolution];
            }
        }
        switch (out.kind) {
        case SubOutcome::Kind::rejected:
            if (stats) ++stats->leaves;
            break;
        case SubOutcome::Kind::exhausted:
            if (stats) {
                ++stats->leaves;
                ++stats->exhausted_leaves;
            }
            return partition_from_groups(node.c, g.order());
        case SubOutcome::Kind::reduced:
            stack.push_back(
                {std::move(out.children.front()), node.a_branchings, node.b_branchings});
            break;
        case SubOutcome::Kind::branch: {
            bool off_a = out.children.front().b_perm.size() > node.c.b_perm.size();
            int a_b = node.a_branchings + (off_a ? 1 : 0);
            int b_b = node.b_branchings + (off_a ? 0 : 1);
            if (stats) {
                auto width = static_cast<long long>(out.children.size());
                if (off_a) {
                    stats->max_a_branchings_per_path =
                        std::max(stats->max_a_branchings_per_path, static_cast<long long>(a_b));
                    stats->max_a_branch_width = std::max(stats->max_a_branch_width, width);
                    if (a_b > k || width > k + 2) ++stats->switch_cap_violations;
                } else {
                    stats->max_b_branchings_per_path =
                        std::max(stats->max_b_branchings_per_path, static_cast<long long>(b_b));
                    stats->max_b_branch_width = std::max(stats->max_b_branch_width, width);
                    if (b_b > k || width > k) ++stats->switch_cap_violations;
                }
            }
            for (auto it = out.children.rbegin(); it != out.children.rend(); ++it)
                stack.push_back({std::move(*it), a_b, b_b});
            break;
        }
        }
    }
    return std::nullopt;
}

namespace {

class SubEngine final : public InductiveRecognizer {
public:
    explicit SubEngine(SubStats* stats) : stats_(stats) {}

    void begin(const Graph& reordered, int k) override {
        full_ = &reordered;
        k_ = k;
        a_clusters_.clear();
        b_clusters_.clear();
    }

    bool step(const PrefixView& view, int new_vertex) override {
        std::vector<int> prefix_ids(view.size());
        std::iota(prefix_ids.begin(), prefix_ids.end(), 0);
        Graph prefix = full_->induced(prefix_ids);
        auto found =
            inductive_subcoloring_step(prefix, new_vertex, a_clusters_, b_clusters_, k_, stats_);
        if (!found) return false;
        a_clusters_ = std::move(found->a_clusters);
        b_clusters_ = std::move(found->b_clusters);
        return true;
    }

    Bipartition certificate() const override {
        Bipartition out;
        out.side_of.assign(full_->order(), Side::B);
        for (const auto& cl : a_clusters_)
            for (int u : cl) out.side_of[u] = Side::A;
        out.a_clusters = a_clusters_;
        out.b_clusters = b_clusters_;
        out.normalize();
        return out;
    }

private:
    SubStats* stats_;
    const Graph* full_ = nullptr;
    int k_ = 0;
    std::vector<std::vector<int>> a_clusters_, b_clusters_;
};

} // namespace

std::optional<Bipartition> recognize_subcoloring_ka(const Graph& g, int k, SubStats* stats) {
    if (k < 0) return std::nullopt;
    // isolated vertices can always sit alone on side B; set them aside so
    // the driver works on the connected part only
    std::vector<int> kept, stripped;
    for (int v = 0; v < g.order(); ++v) (g.degree(v) > 0 ? kept : stripped).push_back(v);
    if (stats) stats->stripped_vertices = static_cast<int>(stripped.size());
    Graph core = g.induced(kept);
    SubEngine engine(stats);
    auto found = recognize_inductively(core, k, engine, OrderMode::degree_sorted,
                                       stats ? &stats->driver : nullptr);
    if (!found) return std::nullopt;

    Bipartition out;
    out.side_of.assign(g.order(), Side::B);
    for (const auto& cl : found->a_clusters) {
        std::vector<int> mapped;
        mapped.reserve(cl.size());
        for (int u : cl) mapped.push_back(kept[u]);
        for (int u : mapped) out.side_of[u] = Side::A;
        out.a_clusters.push_back(std::move(mapped));
    }
    for (const auto& cl : found->b_clusters) {
        std::vector<int> mapped;
        mapped.reserve(cl.size());
        for (int u : cl) mapped.push_back(kept[u]);
        out.b_clusters.push_back(std::move(mapped));
    }
    for (int v : stripped) out.b_clusters.push_back({v});
    out.normalize();
    return out;
}

} // namespace graphpart
