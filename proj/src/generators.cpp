#include "graphpart/generators.hpp"

#include <cmath>
#include <random>
#include <string>

#include "graphpart/errors.hpp"

namespace graphpart {

namespace {

struct EdgeCoin {
    std::mt19937_64 rng;
    bool always, never;
    std::uint64_t threshold;

    EdgeCoin(double p, std::uint64_t seed)
        : rng(seed), always(p >= 1.0), never(p <= 0.0),
          threshold(always || never ? 0
                                    : static_cast<std::uint64_t>(p * 18446744073709551616.0)) {}

    bool flip() {
        if (never) return false;
        std::uint64_t word = rng(); // draw even when the answer is forced,
                                    // so p=1 graphs stay aligned with the seed
        return always || word < threshold;
    }
};

// near-equal cluster sizes: total split into k parts, larger parts first
std::vector<int> split_sizes(int total, int k) {
    std::vector<int> sizes(k, total / k);
    for (int i = 0; i < total % k; ++i) ++sizes[i];
    return sizes;
}

} // namespace

Graph generate_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw ConfigError("vertex count must be nonnegative");
    if (!(p >= 0.0) || !(p <= 1.0)) throw ConfigError("edge probability must lie in [0,1]");
    EdgeCoin coin(p, seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin.flip()) edges.push_back({u, v});
    return Graph::build(n, edges);
}

PlantedInstance generate_planted_monopolar(int n, int k, double p, std::uint64_t seed,
                                           double a_fraction, int a_size_override) {
    if (n < 0) throw ConfigError("vertex count must be nonnegative");
    if (k < 0) throw ConfigError("cluster count must be nonnegative");
    if (!(p >= 0.0) || !(p <= 1.0)) throw ConfigError("edge probability must lie in [0,1]");
    int a_size = a_size_override >= 0
                     ? a_size_override
                     : static_cast<int>(std::lround(a_fraction * n));
    if (a_size > n) throw ConfigError("A side larger than the graph");
    if (k == 0 && a_size > 0) throw ConfigError("k=0 leaves no room for A vertices");
    if (k > 0 && a_size < k)
        throw ConfigError("cannot split " + std::to_string(a_size) + " A vertices into " +
                          std::to_string(k) + " nonempty cliques");

    std::vector<Edge> edges;
    Bipartition cert;
    cert.side_of.assign(n, Side::B);
    int next = 0;
    if (k > 0)
        for (int size : split_sizes(a_size, k)) {
            std::vector<int> members;
            for (int i = 0; i < size; ++i) {
                int u = next++;
                cert.side_of[u] = Side::A;
                for (int w : members) edges.push_back({w, u});
                members.push_back(u);
            }
            cert.a_clusters.push_back(std::move(members));
        }
    for (int u = a_size; u < n; ++u) cert.b_clusters.push_back({u});

    EdgeCoin coin(p, seed);
    for (int u = 0; u < a_size; ++u)
        for (int v = a_size; v < n; ++v)
            if (coin.flip()) edges.push_back({u, v});

    return {Graph::build(n, edges), std::move(cert)};
}

PlantedInstance generate_planted_subcoloring(int n, int k, double p, std::uint64_t seed,
                                             double a_fraction, int a_size_override) {
    PlantedInstance inst = generate_planted_monopolar(n, k, 0.0, seed, a_fraction,
                                                      a_size_override);
    int a_size = 0;
    for (const auto& c : inst.certificate.a_clusters) a_size += static_cast<int>(c.size());

    std::vector<Edge> edges = inst.graph.edges();
    Bipartition cert = std::move(inst.certificate);
    cert.b_clusters.clear();
    for (int u = a_size; u < n; u += 2) {
        if (u + 1 < n) {
            edges.push_back({u, u + 1});
            cert.b_clusters.push_back({u, u + 1});
        } else {
            cert.b_clusters.push_back({u});
        }
    }

    EdgeCoin coin(p, seed);
    for (int u = 0; u < a_size; ++u)
        for (int v = a_size; v < n; ++v)
            if (coin.flip()) edges.push_back({u, v});

    return {Graph::build(n, edges), std::move(cert)};
}

} // namespace graphpart
