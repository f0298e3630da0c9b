#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graphpart/certificate.hpp"
#include "graphpart/graph.hpp"
#include "graphpart/inductive.hpp"

namespace graphpart {

// Step-start snapshot shared by every constraint of one search tree. The
// arrays are indexed by vertex id; new_vertex has placeholder entries
// (side B, no cluster) and is tracked through the permanent sets instead.
struct MonoFrozen {
    const PrefixView* adjacency = nullptr;
    int new_vertex = -1;
    std::vector<Side> side;
    std::vector<int> cluster_of;     // cluster slot for A-side vertices, -1 otherwise
    std::vector<int> pos_in_cluster; // index into the slot's member list
    std::vector<std::vector<int>> clusters; // unsorted member lists; freed slots stay empty

    // standalone construction keeps its own graph and view alive
    std::shared_ptr<const Graph> graph_copy;
    std::unique_ptr<PrefixView> full_view;

    const PrefixView& adj() const { return *adjacency; }
};

// Four-partition of the current prefix: movable vertices keep their
// step-start side, permanent vertices are listed here and never leave.
struct MonoConstraint {
    std::shared_ptr<const MonoFrozen> frozen;
    std::vector<int> a_perm; // insertion order
    std::vector<int> b_perm;

    bool in_a_perm(int u) const;
    bool in_b_perm(int u) const;
    bool in_a_star(int u) const;
    bool in_b_star(int u) const;
    std::vector<int> a_star() const; // ascending
    std::vector<int> b_star() const;
};

struct MonoOutcome {
    enum class Kind { rejected, reduced, branch, exhausted };
    Kind kind = Kind::exhausted;
    std::string rule; // display name of the rule that fired; empty when exhausted
    std::vector<MonoConstraint> children; // one when reduced, two when branch
};

struct MonoStats {
    DriverStats driver;
    long long steps = 0;
    long long nodes = 0;
    long long leaves = 0;
    long long exhausted_leaves = 0;
    // per root-to-leaf path maxima; the first two are capped by k+1
    long long max_promotions_per_path = 0; // forced-to-a applications
    long long max_demotions_per_path = 0;  // forced-to-b + both branch rules
    long long max_branchings_per_path = 0;
    long long cap_violations = 0; // must stay 0
    std::map<std::string, long long> rule_applications;
};

// The two ways to extend a valid partition of g minus v: v permanently on
// the A side, and v permanently on the B side (in that order). Validates
// the partition structurally; throws BadCertificate.
std::pair<MonoConstraint, MonoConstraint> initial_mono_constraints(const Graph& g, int v,
                                                                   std::span<const int> a_prev,
                                                                   std::span<const int> b_prev);

// Applies the first applicable rule. Reduction rules run before branching
// rules; vertex choices are the lowest qualifying ids.
MonoOutcome apply_mono_rules(const MonoConstraint& c, int k);

// One inductive step: searches the constraint tree rooted at both initial
// constraints and returns the first partition found, depth-first.
std::optional<Bipartition> inductive_monopolar_step(const Graph& g, int v,
                                                    std::span<const int> a_prev,
                                                    std::span<const int> b_prev, int k,
                                                    MonoStats* stats = nullptr);

// Full recognizer: grows the graph in nondecreasing degree order and keeps
// a partition of each prefix, sharing cluster state across steps.
std::optional<Bipartition> recognize_monopolar(const Graph& g, int k, MonoStats* stats = nullptr);

// Incremental engine behind recognize_monopolar, reusable with any order.
class MonopolarEngine final : public InductiveRecognizer {
public:
    explicit MonopolarEngine(MonoStats* stats = nullptr) : stats_(stats) {}
    void begin(const Graph& reordered, int k) override;
    bool step(const PrefixView& view, int new_vertex) override;
    Bipartition certificate() const override;

private:
    void commit(const MonoConstraint& leaf);

    MonoFrozen state_;
    std::vector<int> free_slots_;
    int k_ = 0;
    MonoStats* stats_;
};

} // namespace graphpart
