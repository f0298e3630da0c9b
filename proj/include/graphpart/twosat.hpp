#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace graphpart {

struct Literal {
    int var = 0;
    bool positive = true;
};

struct TwoSatFormula {
    int var_count = 0;
    std::vector<std::pair<Literal, Literal>> clauses;
};

// Satisfying assignment via implication-graph strongly connected components,
// absent when unsatisfiable. Linear in variables plus clauses.
std::optional<std::vector<bool>> solve_twosat(const TwoSatFormula& f);

// True when the assignment satisfies every clause.
bool evaluate_twosat(const TwoSatFormula& f, const std::vector<bool>& assignment);

} // namespace graphpart
