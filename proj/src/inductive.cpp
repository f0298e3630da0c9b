#include "graphpart/inductive.hpp"

#include <numeric>

namespace graphpart {

std::optional<Bipartition> recognize_inductively(const Graph& g, int k, InductiveRecognizer& rec,
                                                 OrderMode mode, DriverStats* stats) {
    std::vector<int> order;
    if (mode == OrderMode::degree_sorted) {
        order = degree_sorted_order(g);
    } else {
        order.resize(g.order());
        std::iota(order.begin(), order.end(), 0);
    }
    if (stats) {
        stats->order = order;
        stats->failed_prefix = -1;
        stats->degree_bound_violations = 0;
    }
    if (g.order() == 0) return Bipartition{};

    Graph reordered = g.permuted(order);
    rec.begin(reordered, k);
    PrefixView view(reordered);
    for (int i = 0; i < g.order(); ++i) {
        int v = view.extend();
        if (stats && mode == OrderMode::degree_sorted && view.max_degree() > g.degree(order[i]))
            ++stats->degree_bound_violations;
        if (!rec.step(view, v)) {
            if (stats) stats->failed_prefix = i + 1;
            return std::nullopt;
        }
    }
    return rec.certificate().relabeled(order);
}

} // namespace graphpart
