#pragma once

#include <optional>
#include <span>

#include "graphpart/certificate.hpp"
#include "graphpart/graph.hpp"
#include "graphpart/inductive.hpp"
#include "graphpart/property_spec.hpp"

namespace graphpart {

// C(r+s-2, r-1), an upper bound on the Ramsey number R(r,s). Throws
// BoundTooLarge when the binomial does not fit in int.
int ramsey_upper_bound(int r, int s);

// Cap on the number of (A-subset, B-subset) pairs a single xp_inductive_step
// may enumerate before giving up with BudgetExceeded.
inline constexpr long long kDefaultXpBudget = 10'000'000;

// One inductive step of the generic recognizer for mutually d-exclusive
// hereditary properties: given a valid (spec_a, spec_b)-partition (a_prev,
// b_prev) of g minus v, tries every way of moving fewer than d vertices
// across and placing v on either side, A-side placements first. Subsets are
// enumerated by increasing size, then lexicographically.
std::optional<Bipartition> xp_inductive_step(const Graph& g, int v, std::span<const int> a_prev,
                                             std::span<const int> b_prev,
                                             const PropertySpec& spec_a,
                                             const PropertySpec& spec_b, int d,
                                             long long budget = kDefaultXpBudget);

// Full recognizer built on xp_inductive_step; processes vertices in input
// order.
std::optional<Bipartition> recognize_exclusive(const Graph& g, const PropertySpec& spec_a,
                                               const PropertySpec& spec_b, int d,
                                               DriverStats* stats = nullptr,
                                               long long budget = kDefaultXpBudget);

struct FsgStats {
    long long steps = 0;
    long long nodes = 0;
    long long leaves = 0;
    long long exhausted_leaves = 0;
    // per-root-to-leaf maxima of rule applications, against the caps below
    long long max_b_branchings_per_path = 0;
    long long max_a_applications_per_path = 0;
    long long b_branch_cap = 0;
    long long a_application_cap = 0;
    long long cap_violations = 0;  // paths that exceeded a cap; must stay 0
    int failed_prefix = -1;
};

// Search-tree recognizer for partitions into a cluster graph with at most k
// clusters versus a property given by finitely many minimal forbidden
// induced subgraphs, one of which must be a clique.
std::optional<Bipartition> recognize_cluster_vs_fsg(const Graph& g, int k,
                                                    const PropertySpec& spec_b,
                                                    FsgStats* stats = nullptr);

// Search-tree recognizer for two finitely-characterized properties where
// spec_a excludes some edgeless graph and spec_b excludes some clique; the
// exclusion orders bound every branch path via the Ramsey bound.
std::optional<Bipartition> recognize_small_fsg(const Graph& g, const PropertySpec& spec_a,
                                               const PropertySpec& spec_b,
                                               FsgStats* stats = nullptr);

// Branching recognizer for partitions with |A| <= k, spec_a arbitrary
// polynomial-time, spec_b finitely characterized. Branches on the vertices
// of a forbidden occurrence left inside B.
std::optional<Bipartition> recognize_bounded_a(const Graph& g, int k, const PropertySpec& spec_a,
                                               const PropertySpec& spec_b);

} // namespace graphpart
