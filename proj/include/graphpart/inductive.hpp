#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "graphpart/certificate.hpp"
#include "graphpart/graph.hpp"

namespace graphpart {

// Read-only window over the first size() vertices of a graph whose vertex
// ids already follow the processing order. Adjacency lists are sorted, so
// the visible neighbors of a vertex form a prefix of its full list.
class PrefixView {
public:
    explicit PrefixView(const Graph& reordered) : g_(&reordered), visible_(reordered.order(), 0) {}

    const Graph& full() const { return *g_; }
    int size() const { return size_; }
    int max_degree() const { return max_degree_; }

    // Makes the next vertex visible and returns its id (the old size()).
    int extend() {
        int v = size_;
        int below = 0;
        for (int w : g_->neighbors(v)) {
            if (w >= v) break;
            ++visible_[w];
            if (visible_[w] > max_degree_) max_degree_ = visible_[w];
            ++below;
        }
        visible_[v] = below;
        if (below > max_degree_) max_degree_ = below;
        ++size_;
        return v;
    }

    int degree(int v) const { return visible_[v]; }

    std::span<const int> neighbors(int v) const {
        return g_->neighbors(v).first(visible_[v]);
    }

    bool adjacent(int u, int v) const {
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

private:
    const Graph* g_;
    int size_ = 0;
    int max_degree_ = 0;
    std::vector<int> visible_;
};

enum class OrderMode { input, degree_sorted };

struct DriverStats {
    std::vector<int> order;  // processing order, original vertex ids
    int failed_prefix = -1;  // prefix size at the first failing step, -1 when none
    // times the prefix's max degree exceeded the full-graph degree of the
    // newest vertex; must stay 0 under degree_sorted order
    long long degree_bound_violations = 0;
};

// Stateful per-recognition engine driven over growing prefixes. step() sees
// each prefix exactly once, in order, and may keep incremental state keyed
// to the reordered vertex ids.
class InductiveRecognizer {
public:
    virtual ~InductiveRecognizer() = default;
    virtual void begin(const Graph& reordered, int k) = 0;
    // view covers vertices 0..new_vertex; false means the extended prefix
    // has no valid partition (final by heredity).
    virtual bool step(const PrefixView& view, int new_vertex) = 0;
    // valid after the last successful step; expressed in reordered ids
    virtual Bipartition certificate() const = 0;
};

// Grows g one vertex at a time and feeds each prefix to rec. The returned
// certificate is relabeled back to the input ids.
std::optional<Bipartition> recognize_inductively(const Graph& g, int k, InductiveRecognizer& rec,
                                                 OrderMode mode, DriverStats* stats = nullptr);

} // namespace graphpart
