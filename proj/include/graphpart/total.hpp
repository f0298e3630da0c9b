#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphpart/certificate.hpp"
#include "graphpart/graph.hpp"
#include "graphpart/twosat.hpp"

namespace graphpart {

// Whole-graph working partition for the total-cluster-bound solver. The
// clusters listed per side are committed: a fulfilling solution keeps each
// one inside a single cluster of its side. Remainder vertices are still
// free. Dummy vertices take ids from g.order() upwards and live only inside
// clusters; their adjacency is stored here so the input graph never changes.
struct TotalConstraint {
    std::vector<std::vector<int>> a_clusters;
    std::vector<std::vector<int>> b_clusters;
    std::vector<int> remainder; // ascending, real vertices only
    int dummy_count = 0;
    std::vector<std::vector<int>> dummy_adjacency; // per dummy, sorted real ids
};

struct TotalOutcome {
    enum class Kind { rejected, reduced, branch, exhausted };
    Kind kind = Kind::exhausted;
    std::string rule; // display name of the rule that fired; empty when exhausted
    std::vector<TotalConstraint> children;
};

struct TotalStats {
    long long nodes = 0;
    long long leaves = 0;
    long long exhausted_leaves = 0;
    long long satisfiable_leaves = 0;
    // the dummy-opening rule may fire at most once per root-leaf path
    long long dummy_rule_violations = 0;
    long long max_dummy_branches = 0;
    // materialized answers re-checked against the cluster bound; stays 0
    long long recount_failures = 0;
    std::map<std::string, long long> rule_applications;
};

// Applies the first applicable rule: the cluster-count bound, then forced
// remainder placements, then the four cluster-opening branch rules. Vertex
// and pair choices are the lowest qualifying ids. Exhausted constraints are
// handed to the 2-CNF encoding.
TotalOutcome apply_total_rules(const Graph& g, const TotalConstraint& c, int k);

// 2-CNF encoding of an exhausted constraint: one variable per remainder
// vertex, true meaning it joins its A-side cluster. Clauses forbid exactly
// the placements that would merge two committed clusters or break a clique.
// Throws UnclassifiedRemainder if some remainder vertex is not adjacent to
// one full cluster on each side (which no exhausted constraint can have).
TwoSatFormula build_twosat(const Graph& g, const TotalConstraint& c);

// Full recognizer for partitions into two cluster graphs with at most k
// clusters in total. Branches on whole-graph constraints starting from an
// all-remainder root, finishing each exhausted leaf through 2-SAT.
std::optional<Bipartition> recognize_subcoloring_total(const Graph& g, int k,
                                                       TotalStats* stats = nullptr);

} // namespace graphpart
