#include "latpoly/lp.hpp"

#include <cassert>
#include <cstddef>
#include <utility>

namespace latpoly {

namespace {

// dense tableau over exact rationals; rows hold [B^-1 A | B^-1 b],
// cost holds reduced costs and, in the last slot, -objective
struct Tableau {
    RatMatrix rows;
    std::vector<Rat> cost;
    std::vector<int> basis;
    size_t ncols = 0; // excluding rhs

    void pivot(size_t pr, size_t pc) {
        const Rat p = rows[pr][pc];
        for (Rat& v : rows[pr]) v /= p;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == pr || rows[i][pc] == 0) continue;
            const Rat f = rows[i][pc];
            for (size_t j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[pr][j];
        }
        if (cost[pc] != 0) {
            const Rat f = cost[pc];
            for (size_t j = 0; j <= ncols; ++j) cost[j] -= f * rows[pr][j];
        }
        basis[pr] = static_cast<int>(pc);
    }

    // minimizes; entering = smallest index with negative reduced cost,
    // leaving = min ratio with smallest basis index on ties (Bland)
    LpStatus run(const std::vector<bool>& allowed) {
        for (;;) {
            size_t enter = ncols;
            for (size_t j = 0; j < ncols; ++j)
                if (allowed[j] && cost[j] < 0) { enter = j; break; }
            if (enter == ncols) return LpStatus::optimal;
            size_t leave = rows.size();
            Rat best_ratio;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0) continue;
                Rat ratio = rows[i][ncols] / rows[i][enter];
                if (leave == rows.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == rows.size()) return LpStatus::unbounded;
            pivot(leave, enter);
        }
    }

    void load_cost(const std::vector<Rat>& c) {
        cost.assign(ncols + 1, Rat(0));
        for (size_t j = 0; j < c.size(); ++j) cost[j] = c[j];
        for (size_t i = 0; i < rows.size(); ++i) {
            const int b = basis[i];
            if (b >= 0 && cost[static_cast<size_t>(b)] != 0) {
                const Rat f = cost[static_cast<size_t>(b)];
                for (size_t j = 0; j <= ncols; ++j) cost[j] -= f * rows[i][j];
            }
        }
    }
};

// minimize c.z over {z >= 0 : M z = q}; rows are sign-flipped so q >= 0,
// then phase 1 runs on artificials
LpSolution solve_standard(RatMatrix m, std::vector<Rat> q, const std::vector<Rat>& c) {
    const size_t nrows = m.size();
    const size_t nvars = c.size();
    for (size_t i = 0; i < nrows; ++i)
        if (q[i] < 0) {
            q[i] = -q[i];
            for (Rat& v : m[i]) v = -v;
        }

    Tableau t;
    t.ncols = nvars + nrows;
    t.rows.assign(nrows, std::vector<Rat>(t.ncols + 1, Rat(0)));
    t.basis.assign(nrows, -1);
    for (size_t i = 0; i < nrows; ++i) {
        for (size_t j = 0; j < nvars; ++j) t.rows[i][j] = m[i][j];
        t.rows[i][nvars + i] = 1;
        t.rows[i][t.ncols] = q[i];
        t.basis[i] = static_cast<int>(nvars + i);
    }

    std::vector<bool> allowed(t.ncols, true);
    std::vector<Rat> phase1(t.ncols, Rat(0));
    for (size_t j = nvars; j < t.ncols; ++j) phase1[j] = 1;
    t.load_cost(phase1);
    LpStatus st = t.run(allowed);
    assert(st == LpStatus::optimal); // phase 1 is bounded below by 0
    if (-t.cost[t.ncols] != 0) return {LpStatus::infeasible, Rat(0), {}};

    // pivot leftover artificials out; a row with no real column is redundant
    for (size_t i = 0; i < t.rows.size(); ++i) {
        if (t.basis[i] < static_cast<int>(nvars)) continue;
        size_t pc = t.ncols;
        for (size_t j = 0; j < nvars; ++j)
            if (t.rows[i][j] != 0) { pc = j; break; }
        if (pc < t.ncols) t.pivot(i, pc);
    }
    for (size_t j = nvars; j < t.ncols; ++j) allowed[j] = false;

    t.load_cost(c);
    st = t.run(allowed);
    if (st == LpStatus::unbounded) return {LpStatus::unbounded, Rat(0), {}};

    LpSolution sol;
    sol.status = LpStatus::optimal;
    sol.x.assign(nvars, Rat(0));
    for (size_t i = 0; i < t.rows.size(); ++i)
        if (t.basis[i] >= 0 && t.basis[i] < static_cast<int>(nvars))
            sol.x[static_cast<size_t>(t.basis[i])] = t.rows[i][t.ncols];
    sol.objective = 0;
    for (size_t j = 0; j < nvars; ++j) sol.objective += c[j] * sol.x[j];
    return sol;
}

} // namespace

LpSolution lp_maximize(const RatMatrix& a, const std::vector<Rat>& b, const std::vector<Rat>& c) {
    const size_t m = a.size();
    const size_t k = c.size();
    // free x split as x+ - x-, slack per row
    const size_t nvars = 2 * k + m;
    RatMatrix rows(m, std::vector<Rat>(nvars, Rat(0)));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < k; ++j) {
            rows[i][j] = a[i][j];
            rows[i][k + j] = -a[i][j];
        }
        rows[i][2 * k + i] = 1;
    }
    std::vector<Rat> obj(nvars, Rat(0));
    for (size_t j = 0; j < k; ++j) {
        obj[j] = -c[j]; // minimize -c.x
        obj[k + j] = c[j];
    }
    LpSolution std_sol = solve_standard(std::move(rows), b, obj);
    if (std_sol.status != LpStatus::optimal) return std_sol;

    LpSolution sol;
    sol.status = LpStatus::optimal;
    sol.x.assign(k, Rat(0));
    for (size_t j = 0; j < k; ++j) sol.x[j] = std_sol.x[j] - std_sol.x[k + j];
    sol.objective = 0;
    for (size_t j = 0; j < k; ++j) sol.objective += c[j] * sol.x[j];
    return sol;
}

bool lp_feasible_eq(const RatMatrix& aeq, const std::vector<Rat>& beq) {
    if (aeq.empty()) return true;
    std::vector<Rat> zero(aeq.front().size(), Rat(0));
    return solve_standard(aeq, beq, zero).status == LpStatus::optimal;
}

} // namespace latpoly
