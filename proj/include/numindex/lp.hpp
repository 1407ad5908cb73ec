#pragma once

#include "numindex/rational.hpp"

#include <utility>
#include <vector>

namespace numindex {

enum class LpStatus { Optimal, Infeasible, Unbounded };

/**
 * maximize objective·x
 * subject to ub_a·x <= ub_b,  eq_a·x == eq_b,
 * x_j >= 0 where nonneg[j], otherwise x_j free.
 *
 * Either constraint block may be empty (zero rows).  An empty `nonneg`
 * means every variable is free.
 */
struct LpProblem {
    RatMat ub_a;
    RatVec ub_b;
    RatMat eq_a;
    RatVec eq_b;
    RatVec objective;
    std::vector<bool> nonneg;
};

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat objective;
    RatVec x;

    bool optimal() const { return status == LpStatus::Optimal; }
};

/**
 * Exact two-phase primal simplex with Bland's anti-cycling rule.  All
 * arithmetic is rational, so feasibility, boundedness, and optimality of
 * the result are certificates rather than estimates.
 */
LpResult lp_solve(const LpProblem& problem);

struct ConvexMembership {
    bool inside = false;
    /** Indices into the point list with positive weights summing to one. */
    std::vector<std::pair<Eigen::Index, Rat>> coefficients;
};

/**
 * Decide point ∈ conv(rows of points) exactly.  On success the returned
 * coefficients form a Caratheodory witness: at most dim+1 of them are
 * nonzero because the simplex returns a basic feasible solution.
 */
ConvexMembership convex_membership(const RatVec& point, const RatMat& points);

struct Separation {
    bool separated = false;
    RatVec direction;
    Rat margin;
};

/**
 * Look for a functional d with max|d_j| <= 1 and d·p <= -margin < 0 for
 * every row p.  `separated` is false exactly when the origin lies in the
 * convex hull of the rows (LP duality, decided exactly).
 */
Separation separate_origin(const RatMat& points);

}   // namespace numindex
