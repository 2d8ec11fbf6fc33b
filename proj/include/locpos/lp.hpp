#pragma once

#include <optional>
#include <vector>

#include "locpos/rational.hpp"

namespace locpos {

enum class Relation { LessEq, Eq, GreaterEq };

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPConstraint {
    std::vector<Rat> row;
    Relation rel = Relation::LessEq;
    Rat rhs;
};

struct LPProblem {
    unsigned num_vars = 0;
    std::vector<Rat> objective;
    bool maximize = false;
    std::vector<LPConstraint> constraints;
    // Per-variable lower bound; nullopt means the variable is free.
    // An empty vector defaults every variable to a lower bound of 0.
    std::vector<std::optional<Rat>> lower_bounds;
};

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    std::vector<Rat> solution;  // length num_vars when optimal
    Rat value;
};

// Two-phase primal simplex over exact rationals with Bland's pivot rule.
// Deterministic: identical problems yield identical optimal vertices.
LPResult solve_lp(const LPProblem& problem);

}  // namespace locpos
