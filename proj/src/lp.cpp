#include "numindex/lp.hpp"

#include "numindex/errors.hpp"

#include <algorithm>

namespace numindex {

namespace {

/**
 * Dense rational simplex tableau over the standard form
 *
 *     minimize  cost·z   subject to  table·z = rhs,  z >= 0,
 *
 * solved with Bland's smallest-index pivoting, which cannot cycle, so
 * termination is guaranteed without perturbation tricks.
 */
class Tableau {
public:
    Tableau(RatMat table, RatVec rhs, std::vector<Eigen::Index> basis)
        : table_(std::move(table)), rhs_(std::move(rhs)),
          basis_(std::move(basis))
    {
    }

    // Runs simplex on the given costs.  Returns false when the problem is
    // unbounded below.
    bool minimize(const RatVec& cost)
    {
        for (;;) {
            const RatVec y = dual_prices(cost);
            Eigen::Index entering = -1;
            for (Eigen::Index j = 0; j < table_.cols(); ++j) {
                if (is_basic(j))
                    continue;
                Rat reduced = cost(j) - y.dot(table_.col(j));
                if (reduced < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering < 0)
                return true;

            Eigen::Index leaving = -1;
            Rat best_ratio;
            for (Eigen::Index r = 0; r < table_.rows(); ++r) {
                if (table_(r, entering) <= 0)
                    continue;
                Rat ratio = rhs_(r) / table_(r, entering);
                if (leaving < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[leaving])) {
                    leaving = r;
                    best_ratio = ratio;
                }
            }
            if (leaving < 0)
                return false;
            pivot(leaving, entering);
        }
    }

    void pivot(Eigen::Index row, Eigen::Index col)
    {
        const Rat inv = Rat(1) / table_(row, col);
        table_.row(row) *= inv;
        rhs_(row) *= inv;
        for (Eigen::Index r = 0; r < table_.rows(); ++r) {
            if (r == row || table_(r, col) == 0)
                continue;
            const Rat factor = table_(r, col);
            table_.row(r) -= factor * table_.row(row);
            rhs_(r) -= factor * rhs_(row);
        }
        basis_[row] = col;
    }

    bool is_basic(Eigen::Index col) const
    {
        return std::find(basis_.begin(), basis_.end(), col) != basis_.end();
    }

    RatVec solution(Eigen::Index num_vars) const
    {
        RatVec z = RatVec::Zero(num_vars);
        for (Eigen::Index r = 0; r < table_.rows(); ++r) {
            if (basis_[r] < num_vars)
                z(basis_[r]) = rhs_(r);
        }
        return z;
    }

    RatMat& table() { return table_; }
    RatVec& rhs() { return rhs_; }
    std::vector<Eigen::Index>& basis() { return basis_; }

    void drop_row(Eigen::Index row)
    {
        const Eigen::Index last = table_.rows() - 1;
        if (row != last) {
            table_.row(row) = table_.row(last);
            rhs_(row) = rhs_(last);
            basis_[row] = basis_[last];
        }
        table_.conservativeResize(last, Eigen::NoChange);
        rhs_.conservativeResize(last);
        basis_.pop_back();
    }

    void drop_columns_from(Eigen::Index first)
    {
        table_.conservativeResize(Eigen::NoChange, first);
    }

private:
    // Simplex multipliers for the current basis: y solves y·B = cost_B.
    // The basis columns of an eliminated tableau form the identity, so the
    // multiplier of row r is just the basic cost of row r expressed through
    // the current (already pivoted) rows.
    RatVec dual_prices(const RatVec& cost) const
    {
        RatVec y(table_.rows());
        for (Eigen::Index r = 0; r < table_.rows(); ++r)
            y(r) = basis_[r] < cost.size() ? cost(basis_[r]) : Rat(0);
        return y;
    }

    RatMat table_;
    RatVec rhs_;
    std::vector<Eigen::Index> basis_;
};

}   // namespace

LpResult lp_solve(const LpProblem& problem)
{
    const Eigen::Index n = problem.objective.size();
    const Eigen::Index m_ub = problem.ub_a.rows();
    const Eigen::Index m_eq = problem.eq_a.rows();
    if ((m_ub > 0 && problem.ub_a.cols() != n) ||
        (m_eq > 0 && problem.eq_a.cols() != n) ||
        problem.ub_b.size() != m_ub || problem.eq_b.size() != m_eq)
        throw PreconditionError("inconsistent LP dimensions");
    if (!problem.nonneg.empty() &&
        static_cast<Eigen::Index>(problem.nonneg.size()) != n)
        throw PreconditionError("nonneg flag count does not match variables");

    auto var_nonneg = [&](Eigen::Index j) {
        return !problem.nonneg.empty() &&
               problem.nonneg[static_cast<std::size_t>(j)];
    };

    // Standard-form columns: one column for a sign-constrained variable,
    // a (+,-) pair for a free one, then one slack per inequality row.
    std::vector<Eigen::Index> pos_col(n), neg_col(n, -1);
    Eigen::Index cols = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        pos_col[j] = cols++;
        if (!var_nonneg(j))
            neg_col[j] = cols++;
    }
    const Eigen::Index slack0 = cols;
    cols += m_ub;

    const Eigen::Index rows = m_ub + m_eq;
    RatMat table = RatMat::Zero(rows, cols);
    RatVec rhs(rows);
    for (Eigen::Index i = 0; i < m_ub; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            table(i, pos_col[j]) = problem.ub_a(i, j);
            if (neg_col[j] >= 0)
                table(i, neg_col[j]) = -problem.ub_a(i, j);
        }
        table(i, slack0 + i) = 1;
        rhs(i) = problem.ub_b(i);
    }
    for (Eigen::Index i = 0; i < m_eq; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            table(m_ub + i, pos_col[j]) = problem.eq_a(i, j);
            if (neg_col[j] >= 0)
                table(m_ub + i, neg_col[j]) = -problem.eq_a(i, j);
        }
        rhs(m_ub + i) = problem.eq_b(i);
    }
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (rhs(i) < 0) {
            table.row(i) = -table.row(i);
            rhs(i) = -rhs(i);
        }
    }

    // Phase one: artificial identity basis, minimize the artificial sum.
    const Eigen::Index art0 = cols;
    RatMat full = RatMat::Zero(rows, cols + rows);
    full.leftCols(cols) = table;
    std::vector<Eigen::Index> basis(static_cast<std::size_t>(rows));
    for (Eigen::Index i = 0; i < rows; ++i) {
        full(i, art0 + i) = 1;
        basis[static_cast<std::size_t>(i)] = art0 + i;
    }
    Tableau tab(std::move(full), rhs, std::move(basis));

    RatVec phase1_cost = RatVec::Zero(cols + rows);
    for (Eigen::Index i = 0; i < rows; ++i)
        phase1_cost(art0 + i) = 1;
    if (!tab.minimize(phase1_cost))
        throw PreconditionError("phase-one simplex reported unbounded");

    Rat infeasibility = 0;
    for (Eigen::Index r = 0; r < tab.table().rows(); ++r) {
        if (tab.basis()[static_cast<std::size_t>(r)] >= art0)
            infeasibility += tab.rhs()(r);
    }
    if (infeasibility != 0)
        return {LpStatus::Infeasible, Rat(0), RatVec()};

    // Drive leftover artificials out of the basis; an all-zero row is a
    // redundant constraint and can be dropped.
    for (Eigen::Index r = tab.table().rows() - 1; r >= 0; --r) {
        if (tab.basis()[static_cast<std::size_t>(r)] < art0)
            continue;
        Eigen::Index col = -1;
        for (Eigen::Index j = 0; j < cols; ++j) {
            if (tab.table()(r, j) != 0) {
                col = j;
                break;
            }
        }
        if (col >= 0)
            tab.pivot(r, col);
        else
            tab.drop_row(r);
    }
    tab.drop_columns_from(cols);

    // Phase two on the real objective (negated: the tableau minimizes).
    RatVec phase2_cost = RatVec::Zero(cols);
    for (Eigen::Index j = 0; j < n; ++j) {
        phase2_cost(pos_col[j]) = -problem.objective(j);
        if (neg_col[j] >= 0)
            phase2_cost(neg_col[j]) = problem.objective(j);
    }
    if (!tab.minimize(phase2_cost))
        return {LpStatus::Unbounded, Rat(0), RatVec()};

    const RatVec z = tab.solution(cols);
    RatVec x(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        x(j) = z(pos_col[j]);
        if (neg_col[j] >= 0)
            x(j) -= z(neg_col[j]);
    }
    return {LpStatus::Optimal, problem.objective.dot(x), x};
}

ConvexMembership convex_membership(const RatVec& point, const RatMat& points)
{
    const Eigen::Index k = points.rows();
    const Eigen::Index d = points.cols();
    if (k == 0)
        return {};
    if (point.size() != d)
        throw PreconditionError("membership point has wrong dimension");

    // Feasibility of  points^T·λ = point, 1·λ = 1, λ >= 0.
    LpProblem lp;
    lp.eq_a = RatMat(d + 1, k);
    lp.eq_a.topRows(d) = points.transpose();
    lp.eq_a.row(d).setConstant(Rat(1));
    lp.eq_b = RatVec(d + 1);
    lp.eq_b.head(d) = point;
    lp.eq_b(d) = 1;
    lp.objective = RatVec::Zero(k);
    lp.nonneg.assign(static_cast<std::size_t>(k), true);

    const LpResult r = lp_solve(lp);
    ConvexMembership out;
    if (!r.optimal())
        return out;
    out.inside = true;
    for (Eigen::Index i = 0; i < k; ++i) {
        if (r.x(i) != 0)
            out.coefficients.emplace_back(i, r.x(i));
    }
    return out;
}

Separation separate_origin(const RatMat& points)
{
    const Eigen::Index k = points.rows();
    const Eigen::Index d = points.cols();
    if (k == 0)
        throw PreconditionError("cannot separate from an empty point set");

    // Variables (d_1..d_d, δ): maximize δ subject to points·d + δ <= 0 and
    // the box |d_j| <= 1.  The optimum is positive iff 0 is outside the
    // hull; the box keeps the LP bounded.
    LpProblem lp;
    lp.ub_a = RatMat::Zero(k + 2 * d, d + 1);
    lp.ub_b = RatVec::Zero(k + 2 * d);
    lp.ub_a.block(0, 0, k, d) = points;
    lp.ub_a.block(0, d, k, 1).setConstant(Rat(1));
    for (Eigen::Index j = 0; j < d; ++j) {
        lp.ub_a(k + 2 * j, j) = 1;
        lp.ub_b(k + 2 * j) = 1;
        lp.ub_a(k + 2 * j + 1, j) = -1;
        lp.ub_b(k + 2 * j + 1) = 1;
    }
    lp.objective = RatVec::Zero(d + 1);
    lp.objective(d) = 1;

    const LpResult r = lp_solve(lp);
    if (!r.optimal())
        throw PreconditionError("separation LP failed to solve");

    Separation out;
    out.margin = r.objective;
    out.separated = r.objective > 0;
    out.direction = r.x.head(d);
    return out;
}

}   // namespace numindex
