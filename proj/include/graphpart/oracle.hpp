#pragma once

#include <optional>

#include "graphpart/certificate.hpp"
#include "graphpart/graph.hpp"
#include "graphpart/property_spec.hpp"

namespace graphpart {

// Exponential-time ground-truth recognizers. All of them enumerate the 2^n
// side assignments in binary-counter order with vertex 0 as the least
// significant bit and bit value 0 meaning side A, and return the first valid
// assignment. Size guards throw OracleSizeExceeded; the environment variable
// GRAPHPART_ORACLE_LIMIT overrides them (tests only).

std::optional<Bipartition> brute_monopolar(const Graph& g, int k);
std::optional<Bipartition> brute_subcoloring(const Graph& g, int k, BoundMode mode);
std::optional<Bipartition> brute_pi_partition(const Graph& g, const PropertySpec& spec_a,
                                              const PropertySpec& spec_b);

// Full-sweep variants: the smallest bound for which a partition exists,
// absent when no side assignment is structurally feasible at any bound.
// One sweep answers every k at once, which keeps randomized comparison
// suites fast.
std::optional<int> brute_monopolar_min_clusters(const Graph& g);
std::optional<int> brute_subcoloring_min_clusters(const Graph& g, BoundMode mode);

} // namespace graphpart
