#pragma once

#include "latpoly/linalg.hpp"
#include "latpoly/types.hpp"

#include <vector>

namespace latpoly {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    Rat objective;
    std::vector<Rat> x;
};

// maximize c.x subject to A x <= b, x free; exact two-phase simplex with
// Bland's rule, so it terminates on every input
LpSolution lp_maximize(const RatMatrix& a, const std::vector<Rat>& b, const std::vector<Rat>& c);

// true iff {x >= 0 : Aeq x = beq} is nonempty
bool lp_feasible_eq(const RatMatrix& aeq, const std::vector<Rat>& beq);

} // namespace latpoly
