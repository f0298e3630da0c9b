#include "graphpart/monopolar.hpp"

#include <algorithm>

#include "graphpart/errors.hpp"

namespace graphpart {

namespace {

bool contains(const std::vector<int>& xs, int u) {
    return std::find(xs.begin(), xs.end(), u) != xs.end();
}

// Tiny union-find for per-leaf component grouping; node count is O(k).
struct MiniUf {
    std::vector<int> parent;
    explicit MiniUf(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Connected components of the leaf's A side, expressed as frozen cluster
// slots plus the permanent vertices that joined from outside A'.
struct LeafGrouping {
    int component_count = 0;
    std::vector<std::vector<int>> slots;
    std::vector<std::vector<int>> loose;
};

LeafGrouping group_leaf(const MonoFrozen& f, const MonoConstraint& c) {
    const PrefixView& adj = f.adj();

    std::vector<std::pair<int, int>> removed; // (slot, members now permanently B)
    for (int u : c.b_perm) {
        int s = u == f.new_vertex ? -1 : f.cluster_of[u];
        if (s == -1) continue;
        bool found = false;
        for (auto& p : removed)
            if (p.first == s) {
                ++p.second;
                found = true;
            }
        if (!found) removed.emplace_back(s, 1);
    }
    auto removed_of = [&](int s) {
        for (const auto& p : removed)
            if (p.first == s) return p.second;
        return 0;
    };

    std::vector<int> slot_ids;
    for (int s = 0; s < static_cast<int>(f.clusters.size()); ++s) {
        int sz = static_cast<int>(f.clusters[s].size());
        if (sz > 0 && sz - removed_of(s) > 0) slot_ids.push_back(s);
    }
    std::vector<int> loose_ids;
    for (int u : c.a_perm)
        if (u == f.new_vertex || f.cluster_of[u] == -1) loose_ids.push_back(u);

    int node_count = static_cast<int>(slot_ids.size() + loose_ids.size());
    MiniUf uf(node_count);
    auto slot_node = [&](int s) {
        for (int i = 0; i < static_cast<int>(slot_ids.size()); ++i)
            if (slot_ids[i] == s) return i;
        return -1;
    };
    auto node_of = [&](int w) {
        int s = w == f.new_vertex ? -1 : f.cluster_of[w];
        if (s != -1) return slot_node(s);
        for (int i = 0; i < static_cast<int>(loose_ids.size()); ++i)
            if (loose_ids[i] == w) return static_cast<int>(slot_ids.size()) + i;
        return -1;
    };

    for (int u : c.a_perm) {
        int nu = node_of(u);
        for (int w : adj.neighbors(u)) {
            bool a_side = c.in_a_perm(w) ||
                          (w != f.new_vertex && f.side[w] == Side::A && !c.in_b_perm(w));
            if (!a_side) continue;
            int nw = node_of(w);
            if (nu != -1 && nw != -1) uf.unite(nu, nw);
        }
    }

    LeafGrouping out;
    std::vector<int> comp_of(node_count, -1);
    for (int i = 0; i < node_count; ++i) {
        int r = uf.find(i);
        if (comp_of[r] == -1) {
            comp_of[r] = out.component_count++;
            out.slots.emplace_back();
            out.loose.emplace_back();
        }
        int ci = comp_of[r];
        if (i < static_cast<int>(slot_ids.size()))
            out.slots[ci].push_back(slot_ids[i]);
        else
            out.loose[ci].push_back(loose_ids[i - slot_ids.size()]);
    }
    return out;
}

Bipartition materialize_leaf(const MonoFrozen& f, const MonoConstraint& c,
                             const LeafGrouping& gr) {
    int n = static_cast<int>(f.side.size());
    Bipartition out;
    out.side_of.assign(n, Side::B);
    for (int u = 0; u < n; ++u) {
        bool a = c.in_a_perm(u) ||
                 (u != f.new_vertex && f.side[u] == Side::A && !c.in_b_perm(u));
        if (a)
            out.side_of[u] = Side::A;
        else
            out.b_clusters.push_back({u});
    }
    for (int ci = 0; ci < gr.component_count; ++ci) {
        std::vector<int> members;
        for (int s : gr.slots[ci])
            for (int w : f.clusters[s])
                if (!c.in_b_perm(w)) members.push_back(w);
        for (int w : gr.loose[ci]) members.push_back(w);
        out.a_clusters.push_back(std::move(members));
    }
    out.normalize();
    return out;
}

struct PathNode {
    MonoConstraint c;
    int promotions;
    int demotions;
    int branchings;
};

void note_path(MonoStats* st, const PathNode& node, int k) {
    if (!st) return;
    st->max_promotions_per_path = std::max<long long>(st->max_promotions_per_path, node.promotions);
    st->max_demotions_per_path = std::max<long long>(st->max_demotions_per_path, node.demotions);
    st->max_branchings_per_path = std::max<long long>(st->max_branchings_per_path, node.branchings);
    if (node.promotions > k + 1 || node.demotions > k + 1) ++st->cap_violations;
    if (static_cast<int>(node.c.a_perm.size()) > 2 * k + 3 ||
        static_cast<int>(node.c.b_perm.size()) > k + 2)
        ++st->cap_violations;
}

// Depth-first search over constraints; the first accepted exhausted leaf
// wins. Children are explored in rule order.
std::optional<MonoConstraint> run_mono_tree(MonoConstraint first, MonoConstraint second, int k,
                                            MonoStats* st) {
    std::vector<PathNode> stack;
    stack.push_back({std::move(second), 0, 0, 0});
    stack.push_back({std::move(first), 0, 0, 0});
    while (!stack.empty()) {
        PathNode node = std::move(stack.back());
        stack.pop_back();
        if (st) ++st->nodes;
        MonoOutcome out = apply_mono_rules(node.c, k);
        if (st && !out.rule.empty()) ++st->rule_applications[out.rule];
        switch (out.kind) {
        case MonoOutcome::Kind::rejected:
            if (st) ++st->leaves;
            break;
        case MonoOutcome::Kind::reduced: {
            PathNode child{std::move(out.children[0]),
                           node.promotions + (out.rule == "forced-to-a" ? 1 : 0),
                           node.demotions + (out.rule == "forced-to-b" ? 1 : 0),
                           node.branchings};
            note_path(st, child, k);
            stack.push_back(std::move(child));
            break;
        }
        case MonoOutcome::Kind::branch: {
            PathNode c2{std::move(out.children[1]), node.promotions, node.demotions + 1,
                        node.branchings + 1};
            PathNode c1{std::move(out.children[0]), node.promotions, node.demotions + 1,
                        node.branchings + 1};
            note_path(st, c1, k);
            stack.push_back(std::move(c2));
            stack.push_back(std::move(c1));
            break;
        }
        case MonoOutcome::Kind::exhausted: {
            if (st) {
                ++st->leaves;
                ++st->exhausted_leaves;
            }
            LeafGrouping gr = group_leaf(*node.c.frozen, node.c);
            if (gr.component_count <= k) return std::move(node.c);
            break;
        }
        }
    }
    return std::nullopt;
}

// Validates (a_prev, b_prev) as a monopolar partition of g minus v and
// captures it as the shared step-start snapshot.
std::shared_ptr<MonoFrozen> freeze_partition(const Graph& g, int v, std::span<const int> a_prev,
                                             std::span<const int> b_prev) {
    int n = g.order();
    if (v < 0 || v >= n) throw BadCertificate("new vertex out of range");
    auto f = std::make_shared<MonoFrozen>();
    f->new_vertex = v;
    f->side.assign(n, Side::B);
    f->cluster_of.assign(n, -1);
    f->pos_in_cluster.assign(n, -1);
    std::vector<char> seen(n, 0);
    auto mark = [&](std::span<const int> side_set, Side s) {
        for (int u : side_set) {
            if (u < 0 || u >= n) throw BadCertificate("partition vertex out of range");
            if (u == v) throw BadCertificate("new vertex listed in the previous partition");
            if (seen[u]) throw BadCertificate("vertex listed twice in the previous partition");
            seen[u] = 1;
            f->side[u] = s;
        }
    };
    mark(a_prev, Side::A);
    mark(b_prev, Side::B);
    for (int u = 0; u < n; ++u)
        if (u != v && !seen[u])
            throw BadCertificate("previous partition misses vertex " + std::to_string(u));
    for (int u : b_prev)
        for (int w : g.neighbors(u))
            if (w != v && f->side[w] == Side::B)
                throw BadCertificate("previous B side is not edgeless");
    std::vector<int> av(a_prev.begin(), a_prev.end());
    std::sort(av.begin(), av.end());
    auto dec = cluster_decomposition(g, av);
    if (dec.p3) throw BadCertificate("previous A side is not a cluster graph");
    f->clusters = std::move(dec.clusters);
    for (int s = 0; s < static_cast<int>(f->clusters.size()); ++s)
        for (int i = 0; i < static_cast<int>(f->clusters[s].size()); ++i) {
            int w = f->clusters[s][i];
            f->cluster_of[w] = s;
            f->pos_in_cluster[w] = i;
        }
    f->graph_copy = std::make_shared<Graph>(g);
    f->full_view = std::make_unique<PrefixView>(*f->graph_copy);
    for (int i = 0; i < n; ++i) f->full_view->extend();
    f->adjacency = f->full_view.get();
    return f;
}

} // namespace

bool MonoConstraint::in_a_perm(int u) const { return contains(a_perm, u); }
bool MonoConstraint::in_b_perm(int u) const { return contains(b_perm, u); }

bool MonoConstraint::in_a_star(int u) const {
    return u != frozen->new_vertex && frozen->side[u] == Side::A && !contains(a_perm, u) &&
           !contains(b_perm, u);
}

bool MonoConstraint::in_b_star(int u) const {
    return u != frozen->new_vertex && frozen->side[u] == Side::B && !contains(a_perm, u) &&
           !contains(b_perm, u);
}

std::vector<int> MonoConstraint::a_star() const {
    std::vector<int> out;
    for (int u = 0; u < static_cast<int>(frozen->side.size()); ++u)
        if (in_a_star(u)) out.push_back(u);
    return out;
}

std::vector<int> MonoConstraint::b_star() const {
    std::vector<int> out;
    for (int u = 0; u < static_cast<int>(frozen->side.size()); ++u)
        if (in_b_star(u)) out.push_back(u);
    return out;
}

MonoOutcome apply_mono_rules(const MonoConstraint& c, int k) {
    const MonoFrozen& f = *c.frozen;
    const PrefixView& adj = f.adj();

    // permanent-check: the permanent A side must induce a cluster graph
    // with at most k clusters, the permanent B side must stay edgeless
    {
        int p = static_cast<int>(c.a_perm.size());
        MiniUf uf(p);
        std::vector<char> edge(static_cast<size_t>(p) * p, 0);
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j)
                if (adj.adjacent(c.a_perm[i], c.a_perm[j])) {
                    edge[i * p + j] = 1;
                    uf.unite(i, j);
                }
        bool bad = false;
        for (int i = 0; i < p && !bad; ++i)
            for (int j = i + 1; j < p; ++j)
                if (!edge[i * p + j] && uf.find(i) == uf.find(j)) {
                    bad = true;
                    break;
                }
        if (!bad) {
            int comps = 0;
            for (int i = 0; i < p; ++i)
                if (uf.find(i) == i) ++comps;
            bad = comps > k;
        }
        if (!bad)
            for (int i = 0; i < static_cast<int>(c.b_perm.size()) && !bad; ++i)
                for (int j = i + 1; j < static_cast<int>(c.b_perm.size()); ++j)
                    if (adj.adjacent(c.b_perm[i], c.b_perm[j])) {
                        bad = true;
                        break;
                    }
        if (bad) return {MonoOutcome::Kind::rejected, "permanent-check", {}};
    }

    // forced-to-a: a movable B vertex adjacent to a permanent B vertex must
    // move to the A side
    {
        int best = -1;
        for (int b : c.b_perm)
            for (int w : adj.neighbors(b))
                if (c.in_b_star(w) && (best == -1 || w < best)) best = w;
        if (best != -1) {
            MonoConstraint child = c;
            child.a_perm.push_back(best);
            MonoOutcome out{MonoOutcome::Kind::reduced, "forced-to-a", {}};
            out.children.push_back(std::move(child));
            return out;
        }
    }

    std::vector<int> perm_sorted = c.a_perm;
    std::sort(perm_sorted.begin(), perm_sorted.end());

    // forced-to-b: a movable A vertex forming an induced path with two
    // permanent A vertices must move to the B side; lowest such vertex
    {
        int best = -1;
        for (size_t i = 0; i < perm_sorted.size(); ++i)
            for (size_t j = i + 1; j < perm_sorted.size(); ++j) {
                int w = perm_sorted[i], x = perm_sorted[j];
                auto nw = adj.neighbors(w);
                auto nx = adj.neighbors(x);
                bool wx = adj.adjacent(w, x);
                size_t a = 0, b = 0;
                // candidates ascend, so the first movable hit is this
                // pair's minimum
                while (a < nw.size() || b < nx.size()) {
                    int u;
                    bool in_both = false;
                    if (b >= nx.size() || (a < nw.size() && nw[a] < nx[b])) {
                        u = nw[a++];
                    } else if (a >= nw.size() || nx[b] < nw[a]) {
                        u = nx[b++];
                    } else {
                        u = nw[a];
                        ++a;
                        ++b;
                        in_both = true;
                    }
                    bool qualifies = wx ? !in_both : in_both;
                    if (qualifies && c.in_a_star(u)) {
                        if (best == -1 || u < best) best = u;
                        break;
                    }
                }
            }
        if (best != -1) {
            MonoConstraint child = c;
            child.b_perm.push_back(best);
            MonoOutcome out{MonoOutcome::Kind::reduced, "forced-to-b", {}};
            out.children.push_back(std::move(child));
            return out;
        }
    }

    // p3-pair-branch: two movable A vertices forming an induced path with a
    // permanent A vertex; one of them must become permanently B
    for (int x : perm_sorted) {
        int n1 = -1;
        for (int w : adj.neighbors(x))
            if (c.in_a_star(w)) {
                n1 = w;
                break;
            }
        if (n1 == -1) continue;
        int c0 = f.cluster_of[n1];
        int partner = -1;
        for (int w : adj.neighbors(x))
            if (c.in_a_star(w) && f.cluster_of[w] != c0) {
                partner = w;
                break;
            }
        if (partner == -1) {
            // all movable neighbors of x share n1's cluster; a cluster mate
            // missing the edge to x completes the path through n1
            for (int m : f.clusters[c0])
                if (c.in_a_star(m) && !adj.adjacent(m, x) && (partner == -1 || m < partner))
                    partner = m;
        }
        if (partner != -1) {
            MonoOutcome out{MonoOutcome::Kind::branch, "p3-pair-branch", {}};
            MonoConstraint c1 = c;
            c1.b_perm.push_back(n1);
            MonoConstraint c2 = c;
            c2.b_perm.push_back(partner);
            out.children.push_back(std::move(c1));
            out.children.push_back(std::move(c2));
            return out;
        }
    }

    // singleton-branch: a movable vertex alone in its starting cluster
    // either keeps the A side permanently or moves to B
    {
        int best = -1;
        for (const auto& members : f.clusters)
            if (members.size() == 1) {
                int u = members[0];
                if (c.in_a_star(u) && (best == -1 || u < best)) best = u;
            }
        if (best != -1) {
            MonoOutcome out{MonoOutcome::Kind::branch, "singleton-branch", {}};
            MonoConstraint c1 = c;
            c1.a_perm.push_back(best);
            MonoConstraint c2 = c;
            c2.b_perm.push_back(best);
            out.children.push_back(std::move(c1));
            out.children.push_back(std::move(c2));
            return out;
        }
    }

    return {MonoOutcome::Kind::exhausted, "", {}};
}

std::pair<MonoConstraint, MonoConstraint> initial_mono_constraints(const Graph& g, int v,
                                                                   std::span<const int> a_prev,
                                                                   std::span<const int> b_prev) {
    auto f = freeze_partition(g, v, a_prev, b_prev);
    MonoConstraint in_a{f, {v}, {}};
    MonoConstraint in_b{f, {}, {v}};
    return {std::move(in_a), std::move(in_b)};
}

std::optional<Bipartition> inductive_monopolar_step(const Graph& g, int v,
                                                    std::span<const int> a_prev,
                                                    std::span<const int> b_prev, int k,
                                                    MonoStats* stats) {
    auto f = freeze_partition(g, v, a_prev, b_prev);
    if (static_cast<int>(f->clusters.size()) > k)
        throw BadCertificate("previous partition exceeds the cluster bound");
    if (stats) ++stats->steps;
    MonoConstraint in_a{f, {v}, {}};
    MonoConstraint in_b{f, {}, {v}};
    auto leaf = run_mono_tree(std::move(in_a), std::move(in_b), k, stats);
    if (!leaf) return std::nullopt;
    return materialize_leaf(*f, *leaf, group_leaf(*f, *leaf));
}

void MonopolarEngine::begin(const Graph& reordered, int k) {
    int n = reordered.order();
    k_ = k;
    state_.adjacency = nullptr;
    state_.new_vertex = -1;
    state_.side.assign(n, Side::B);
    state_.cluster_of.assign(n, -1);
    state_.pos_in_cluster.assign(n, -1);
    state_.clusters.clear();
    state_.graph_copy.reset();
    state_.full_view.reset();
    free_slots_.clear();
}

bool MonopolarEngine::step(const PrefixView& view, int new_vertex) {
    if (k_ < 0) return false;
    state_.adjacency = &view;
    state_.new_vertex = new_vertex;
    std::shared_ptr<const MonoFrozen> ref(std::shared_ptr<void>(), &state_);
    MonoConstraint in_a{ref, {new_vertex}, {}};
    MonoConstraint in_b{ref, {}, {new_vertex}};
    if (stats_) ++stats_->steps;
    auto leaf = run_mono_tree(std::move(in_a), std::move(in_b), k_, stats_);
    if (!leaf) return false;
    commit(*leaf);
    state_.new_vertex = -1;
    return true;
}

void MonopolarEngine::commit(const MonoConstraint& leaf) {
    LeafGrouping gr = group_leaf(state_, leaf);
    for (int u : leaf.b_perm) {
        int s = state_.cluster_of[u];
        if (s != -1) {
            auto& members = state_.clusters[s];
            int pos = state_.pos_in_cluster[u];
            int last = members.back();
            members[pos] = last;
            state_.pos_in_cluster[last] = pos;
            members.pop_back();
            state_.cluster_of[u] = -1;
            state_.pos_in_cluster[u] = -1;
            if (members.empty()) free_slots_.push_back(s);
        }
        state_.side[u] = Side::B;
    }
    for (int ci = 0; ci < gr.component_count; ++ci) {
        int target = -1;
        for (int s : gr.slots[ci])
            if (target == -1 || state_.clusters[s].size() > state_.clusters[target].size())
                target = s;
        if (target == -1) {
            if (!free_slots_.empty()) {
                target = free_slots_.back();
                free_slots_.pop_back();
            } else {
                target = static_cast<int>(state_.clusters.size());
                state_.clusters.emplace_back();
            }
        }
        auto& merged = state_.clusters[target];
        for (int s : gr.slots[ci]) {
            if (s == target) continue;
            for (int w : state_.clusters[s]) {
                state_.cluster_of[w] = target;
                state_.pos_in_cluster[w] = static_cast<int>(merged.size());
                merged.push_back(w);
            }
            state_.clusters[s].clear();
            free_slots_.push_back(s);
        }
        for (int w : gr.loose[ci]) {
            state_.side[w] = Side::A;
            state_.cluster_of[w] = target;
            state_.pos_in_cluster[w] = static_cast<int>(merged.size());
            merged.push_back(w);
        }
    }
}

Bipartition MonopolarEngine::certificate() const {
    int n = static_cast<int>(state_.side.size());
    Bipartition out;
    out.side_of = state_.side;
    for (int u = 0; u < n; ++u)
        if (state_.side[u] == Side::B) out.b_clusters.push_back({u});
    for (const auto& members : state_.clusters)
        if (!members.empty()) out.a_clusters.push_back(members);
    out.normalize();
    return out;
}

std::optional<Bipartition> recognize_monopolar(const Graph& g, int k, MonoStats* stats) {
    if (k < 0) return std::nullopt;
    MonopolarEngine engine(stats);
    return recognize_inductively(g, k, engine, OrderMode::degree_sorted,
                                 stats ? &stats->driver : nullptr);
}

} // namespace graphpart
