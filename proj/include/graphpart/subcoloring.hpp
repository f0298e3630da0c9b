#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphpart/certificate.hpp"
#include "graphpart/graph.hpp"
#include "graphpart/inductive.hpp"

namespace graphpart {

// Working partition for the bounded-A-side recognizer. The A side has
// exactly k groups (some possibly empty); the B side has as many groups as
// ever became nonempty, with indices stable under removals, so entries may
// be empty. Together the groups partition the vertex set. Permanent
// vertices never move again; nonpermanent vertices in distinct groups of
// the same side are pairwise nonadjacent.
struct GroupConstraint {
    std::vector<std::vector<int>> a_groups; // member lists sorted ascending
    std::vector<std::vector<int>> b_groups;
    std::vector<int> a_perm; // insertion order
    std::vector<int> b_perm;
};

struct SubOutcome {
    enum class Kind { rejected, reduced, branch, exhausted };
    Kind kind = Kind::exhausted;
    std::string rule; // display name of the rule that fired; empty when exhausted
    std::vector<GroupConstraint> children; // one when reduced, at least one when branch
};

struct SubStats {
    DriverStats driver;
    long long steps = 0;
    long long nodes = 0;
    long long leaves = 0;
    long long exhausted_leaves = 0;
    int stripped_vertices = 0;
    // per inductive step; must stay within 2k+2
    int max_initial_constraints = 0;
    long long initial_cap_violations = 0;
    // per root-to-leaf path, split by the side the switched vertex left;
    // both are expected to stay within k, and widths within k+2 and k
    long long max_a_branchings_per_path = 0;
    long long max_b_branchings_per_path = 0;
    long long max_a_branch_width = 0;
    long long max_b_branch_width = 0;
    long long switch_cap_violations = 0; // logged, not fatal
    std::map<std::string, long long> rule_applications;
};

// The ways to extend a partition of g minus v whose cluster lists are given
// per side: v goes permanently into each A group (first, by group index),
// then into each B group containing a neighbor plus one fresh empty B group.
// The B placements are dropped entirely when v has neighbors in more than
// k+1 of the B clusters. At most 2k+2 constraints result. Validates the
// cluster lists structurally; throws BadCertificate.
std::vector<GroupConstraint> initial_group_constraints(
    const Graph& g, int v, const std::vector<std::vector<int>>& a_clusters,
    const std::vector<std::vector<int>>& b_clusters, int k);

// Applies the first applicable rule. Rejection and forced-permanence checks
// run before the switching rules; vertex choices are the lowest qualifying
// ids. An exhausted constraint directly describes a valid partition.
SubOutcome apply_sub_rules(const Graph& g, const GroupConstraint& c, int k);

// One inductive step: searches the constraint tree over all initial
// placements of v and returns the first partition found, depth-first.
std::optional<Bipartition> inductive_subcoloring_step(
    const Graph& g, int v, const std::vector<std::vector<int>>& a_clusters,
    const std::vector<std::vector<int>>& b_clusters, int k, SubStats* stats = nullptr);

// Full recognizer for partitions into two cluster graphs with at most k
// clusters on the A side. Vertices of degree 0 are set aside up front and
// reinserted as singleton B clusters afterwards.
std::optional<Bipartition> recognize_subcoloring_ka(const Graph& g, int k,
                                                    SubStats* stats = nullptr);

} // namespace graphpart
