#include "graphpart/twosat.hpp"

#include <algorithm>

#include "graphpart/errors.hpp"

namespace graphpart {

namespace {

// literal node ids: 2v for x_v, 2v+1 for its negation
int node_of(const Literal& l, int var_count) {
    if (l.var < 0 || l.var >= var_count) throw OutOfRange("literal references unknown variable");
    return 2 * l.var + (l.positive ? 0 : 1);
}

} // namespace

std::optional<std::vector<bool>> solve_twosat(const TwoSatFormula& f) {
    int n = f.var_count;
    int node_count = 2 * n;
    std::vector<std::vector<int>> succ(node_count);
    for (const auto& [a, b] : f.clauses) {
        int na = node_of(a, n), nb = node_of(b, n);
        succ[na ^ 1].push_back(nb);
        succ[nb ^ 1].push_back(na);
    }

    // iterative Tarjan; components are numbered in completion order, which
    // is reverse topological order of the condensation
    std::vector<int> index(node_count, -1), low(node_count, 0), comp(node_count, -1);
    std::vector<char> on_stack(node_count, 0);
    std::vector<int> scc_stack;
    int next_index = 0, comp_count = 0;
    struct Frame {
        int v;
        size_t edge;
    };
    std::vector<Frame> frames;

    for (int root = 0; root < node_count; ++root) {
        if (index[root] != -1) continue;
        frames.push_back({root, 0});
        while (!frames.empty()) {
            auto& [v, edge] = frames.back();
            if (edge == 0) {
                index[v] = low[v] = next_index++;
                scc_stack.push_back(v);
                on_stack[v] = 1;
            }
            if (edge < succ[v].size()) {
                int w = succ[v][edge++];
                if (index[w] == -1) {
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                while (true) {
                    int w = scc_stack.back();
                    scc_stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = comp_count;
                    if (w == v) break;
                }
                ++comp_count;
            }
            int finished = v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[finished]);
        }
    }

    std::vector<bool> assignment(n);
    for (int v = 0; v < n; ++v) {
        if (comp[2 * v] == comp[2 * v + 1]) return std::nullopt;
        // smaller component id = later in topological order = implied value
        assignment[v] = comp[2 * v] < comp[2 * v + 1];
    }
    return assignment;
}

bool evaluate_twosat(const TwoSatFormula& f, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != f.var_count) return false;
    for (const auto& [a, b] : f.clauses) {
        bool va = assignment[a.var] == a.positive;
        bool vb = assignment[b.var] == b.positive;
        if (!va && !vb) return false;
    }
    return true;
}

} // namespace graphpart
