#pragma once

#include <cstdint>

#include "graphpart/certificate.hpp"
#include "graphpart/graph.hpp"

namespace graphpart {

struct PlantedInstance {
    Graph graph;
    Bipartition certificate; // the planted witness
};

// Erdős–Rényi G(n,p). Each pair (u,v), u<v in lexicographic order, draws one
// 64-bit word; the edge exists iff the word is below floor(p·2^64). The same
// seed therefore yields the same graph on any platform.
Graph generate_gnp(int n, double p, std::uint64_t seed);

// Monopolar instance with a planted witness: the first a_size vertices form
// k near-equal cliques, the rest are independent, and each A-B pair is an
// edge with probability p. a_size defaults to a_fraction*n rounded; pass
// a_size_override >= 0 to pin it.
PlantedInstance generate_planted_monopolar(int n, int k, double p, std::uint64_t seed,
                                           double a_fraction = 0.3, int a_size_override = -1);

// 2-subcoloring instance: A side as above, B side covered by cliques of two
// (trailing singleton when odd), cross edges with probability p. Cross edges
// never invalidate the witness, so the planted partition always verifies.
PlantedInstance generate_planted_subcoloring(int n, int k, double p, std::uint64_t seed,
                                             double a_fraction = 0.3, int a_size_override = -1);

} // namespace graphpart
