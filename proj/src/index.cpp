#include "numindex/index.hpp"

#include "numindex/errors.hpp"
#include "numindex/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace numindex {

namespace {

RatMat unflatten(const RatVec& flat, Eigen::Index dim)
{
    RatMat m(dim, dim);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            m(i, j) = flat(k++);
    return m;
}

void require_small(const Space& s, bool allow_big, const char* what)
{
    if (s.dim() > 3 && !allow_big)
        throw PreconditionError(
            std::string(what) + ": dimension " + std::to_string(s.dim()) +
            " exceeds the default cap of 3; pass the override to proceed");
}

/** Float ratio radius/norm evaluators for the search. */
class RatioObjective {
public:
    RatioObjective(const Space& s) : space_(s), ball_(s)
    {
        if (s.is_polytope()) {
            vertices_ = to_float(s.vertices());
            normals_ = to_float(s.facet_normals());
            for (const TensorFunctional& tf : build_M(s))
                tensors_.push_back(to_float(tf.outer));
            return;
        }
        // Smooth norms: a fixed mesh scanned per call.  For p > 1 the
        // support functional of a mesh point does not depend on the
        // operator, so it is precomputed alongside.
        mesh_ = sphere_mesh(s, 0);
        p_ = s.p_exponent();
        if (p_ > 1.0) {
            funcs_.resize(mesh_.rows(), mesh_.cols());
            for (Eigen::Index b = 0; b < mesh_.cols(); ++b)
                funcs_.col(b) =
                    ball_.support_functional(mesh_.col(b), mesh_.col(b));
        }
    }

    double operator()(const Eigen::MatrixXd& t, long& evals) const
    {
        ++evals;
        if (!space_.is_polytope()) {
            const Eigen::MatrixXd y = t * mesh_;
            double w = 0.0, n = 0.0;
            for (Eigen::Index b = 0; b < mesh_.cols(); ++b) {
                double g;
                if (p_ == 1.0)
                    g = y.col(b).cwiseAbs().sum();
                else if (p_ == 2.0)
                    g = y.col(b).norm();
                else
                    g = std::pow(y.col(b).cwiseAbs().array().pow(p_).sum(),
                                 1.0 / p_);
                n = std::max(n, g);
                if (p_ > 1.0) {
                    w = std::max(w, std::abs(funcs_.col(b).dot(y.col(b))));
                    continue;
                }
                // p = 1: signs are pinned on the nonzero coordinates, the
                // rest of the face contributes its absolute mass.
                double pinned = 0.0, free_mass = 0.0;
                for (Eigen::Index i = 0; i < mesh_.rows(); ++i) {
                    if (std::abs(mesh_(i, b)) > 1e-13)
                        pinned += mesh_(i, b) > 0.0 ? y(i, b) : -y(i, b);
                    else
                        free_mass += std::abs(y(i, b));
                }
                w = std::max(w, std::abs(pinned) + free_mass);
            }
            return n <= 1e-12 ? HUGE_VAL : w / n;
        }
        double w = 0.0;
        for (const Eigen::MatrixXd& g : tensors_)
            w = std::max(w, std::abs((g.array() * t.array()).sum()));
        double n = 0.0;
        for (Eigen::Index v = 0; v < vertices_.rows(); ++v) {
            const Eigen::VectorXd image = t * vertices_.row(v).transpose();
            n = std::max(n, (normals_ * image).maxCoeff());
        }
        return n <= 1e-12 ? HUGE_VAL : w / n;
    }

private:
    const Space& space_;
    FloatBall ball_;
    double p_ = 0.0;
    Eigen::MatrixXd vertices_, normals_, mesh_, funcs_;
    std::vector<Eigen::MatrixXd> tensors_;
};

}   // namespace

bool is_w_norm(const Space& s)
{
    const std::vector<TensorFunctional> m = build_M(s);
    const Eigen::Index ambient = s.dim() * s.dim();
    RatMat flats(static_cast<Eigen::Index>(m.size()), ambient);
    for (Eigen::Index i = 0; i < flats.rows(); ++i)
        flats.row(i) = m[static_cast<std::size_t>(i)].flat().transpose();
    return rat_rank(flats) == ambient;
}

McGregorReport mcgregor(const Space& s)
{
    if (!s.is_polytope())
        throw PreconditionError("the extreme-pair criterion needs a polytope space");
    const RatMat& points = s.vertices();
    const RatMat& duals = s.facet_normals();

    McGregorReport report;
    report.index_one = true;
    for (Eigen::Index v = 0; v < points.rows(); ++v) {
        for (Eigen::Index f = 0; f < duals.rows(); ++f) {
            Rat value = duals.row(f).dot(points.row(v));
            if (value == 1 || value == -1)
                continue;
            report.index_one = false;
            report.witness = McGregorWitness{points.row(v).transpose(),
                                             duals.row(f).transpose(), value};
            return report;
        }
    }
    return report;
}

ExactIndexReport numerical_index_exact(const Space& s, bool allow_big)
{
    if (!s.is_polytope())
        throw PreconditionError("exact index needs a polytope space");
    require_small(s, allow_big, "exact index");

    ExactIndexReport report;
    const Eigen::Index n = s.dim();

    if (!is_w_norm(s)) {
        const std::vector<TensorFunctional> m = build_M(s);
        RatMat flats(static_cast<Eigen::Index>(m.size()), n * n);
        for (Eigen::Index i = 0; i < flats.rows(); ++i)
            flats.row(i) = m[static_cast<std::size_t>(i)].flat().transpose();
        const std::optional<RatVec> kernel = rat_nullspace_vector(flats);
        report.value = 0;
        report.degenerate = true;
        if (kernel)
            report.kernel_witness = unflatten(*kernel, n);
        return report;
    }

    OperatorBallPolytope ball = w_ball(s);
    Rat best(0);
    RatVec best_flat;
    for (const TensorFunctional& tf : build_A(s)) {
        LpProblem lp;
        lp.ub_a = ball.normals();
        lp.ub_b = RatVec::Constant(lp.ub_a.rows(), Rat(1));
        lp.objective = tf.flat();
        const LpResult r = lp_solve(lp);
        if (!r.optimal())
            throw PreconditionError(
                "operator-norm LP failed over the radius ball");
        if (r.objective > best) {
            best = r.objective;
            best_flat = r.x;
        }
    }
    report.max_op_norm = best;
    report.value = Rat(1) / best;
    report.extremal_operator = unflatten(best_flat, n);
    return report;
}

SearchIndexReport numerical_index_search(const Space& s,
                                         const SearchBudget& budget)
{
    if (budget.restarts < 1)
        throw PreconditionError("search needs at least one restart");
    const Eigen::Index n = s.dim();
    const RatioObjective objective(s);

    SearchIndexReport report;
    report.restarts = budget.restarts;
    report.seed = budget.seed;

    double best = HUGE_VAL;
    Eigen::MatrixXd best_t;

    for (int restart = 0; restart < budget.restarts; ++restart) {
        std::mt19937_64 rng(budget.seed * 0x9E3779B97F4A7C15ULL +
                            static_cast<std::uint64_t>(restart) + 1);
        std::uniform_real_distribution<double> uniform(-1.0, 1.0);

        Eigen::MatrixXd t(n, n);
        double scale = 0.0;
        do {
            for (Eigen::Index i = 0; i < n; ++i)
                for (Eigen::Index j = 0; j < n; ++j)
                    t(i, j) = uniform(rng);
            scale = t.norm();
        } while (scale < 1e-3);
        t /= scale;

        // Direction pool: coordinate moves plus a few random matrices to
        // escape the kinks of a piecewise-linear objective.
        std::vector<Eigen::MatrixXd> directions;
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
                e(i, j) = 1.0;
                directions.push_back(e);
            }
        }
        for (int k = 0; k < 6; ++k) {
            Eigen::MatrixXd e(n, n);
            for (Eigen::Index i = 0; i < n; ++i)
                for (Eigen::Index j = 0; j < n; ++j)
                    e(i, j) = uniform(rng);
            directions.push_back(e / e.norm());
        }

        double value = objective(t, report.evaluations);
        double step = 0.5;
        // Cap the sweeps: on smooth norms the objective can otherwise
        // yield an endless stream of sub-rounding improvements at a
        // fixed step and the halving never progresses.
        for (int sweep = 0; step > 1e-12 && sweep < 400; ++sweep) {
            bool improved = false;
            for (const Eigen::MatrixXd& d : directions) {
                for (double sign : {1.0, -1.0}) {
                    Eigen::MatrixXd cand = t + sign * step * d;
                    const double norm = cand.norm();
                    if (norm < 1e-9)
                        continue;
                    cand /= norm;
                    const double v = objective(cand, report.evaluations);
                    if (v < value - 1e-13 * (1.0 + std::abs(value))) {
                        value = v;
                        t = cand;
                        improved = true;
                    }
                }
            }
            if (!improved)
                step *= 0.5;
        }
        if (value < best) {
            best = value;
            best_t = t;
        }
    }

    report.witness = best_t;
    report.upper_bound = best;

    if (s.is_polytope()) {
        const Operator witness(s, rat_from_float(best_t));
        const Rat nm = op_norm(witness);
        if (nm > 0) {
            report.certified_upper = numerical_radius(witness) / nm;
            report.upper_bound = to_double(*report.certified_upper);
        }
    }
    return report;
}

SpearReport spear_check_identity(const Space& s, long trials,
                                 std::uint64_t seed)
{
    if (!s.is_polytope())
        throw PreconditionError("the spear identity check needs a polytope space");
    if (trials < 1)
        throw PreconditionError("spear check needs at least one trial");

    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);
    std::uniform_int_distribution<int> numerator(-12, 12);
    std::uniform_int_distribution<int> denominator(1, 4);
    const Eigen::Index n = s.dim();
    const Operator id = Operator::identity(s);

    SpearReport report;
    report.holds = true;
    for (long trial = 0; trial < trials; ++trial) {
        RatMat a(n, n);
        bool nonzero = false;
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                a(i, j) = Rat(numerator(rng), denominator(rng));
                if (a(i, j) != 0)
                    nonzero = true;
            }
        }
        ++report.trials_run;
        if (!nonzero)
            continue;

        const Rat norm_a = op_norm(Operator(s, a));
        const Rat plus = op_norm(Operator(s, RatMat(id.rational() + a)));
        const Rat minus = op_norm(Operator(s, RatMat(id.rational() - a)));
        const Rat lhs = std::max(plus, minus);
        const Rat rhs = Rat(1) + norm_a;
        if (lhs != rhs) {
            report.holds = false;
            report.witness = a;
            report.lhs = lhs;
            report.rhs = rhs;
            return report;
        }
    }
    return report;
}

}   // namespace numindex
