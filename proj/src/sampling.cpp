#include "numindex/sampling.hpp"

#include "numindex/errors.hpp"
#include "numindex/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace numindex {

namespace {

// Facet-activity tolerance: normalized points sit on a facet up to
// rounding, so this only needs to absorb float noise.
constexpr double kGateTol = 1e-10;
constexpr double kZeroCoord = 1e-13;

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                             Eigen::RowMajor>;

double lp_gauge(const double* x, Eigen::Index dim, double p)
{
    double acc = 0.0;
    if (p == 1.0) {
        for (Eigen::Index i = 0; i < dim; ++i)
            acc += std::abs(x[i]);
        return acc;
    }
    if (p == 2.0) {
        for (Eigen::Index i = 0; i < dim; ++i)
            acc += x[i] * x[i];
        return std::sqrt(acc);
    }
    for (Eigen::Index i = 0; i < dim; ++i)
        acc += std::pow(std::abs(x[i]), p);
    return std::pow(acc, 1.0 / p);
}

/**
 * Column-batched evaluator.  Columns of X are arbitrary nonzero
 * directions; values() normalizes them onto the unit sphere in place and
 * returns one number per column through the active kernel set.
 */
class BatchEval {
public:
    BatchEval(const FloatBall& ball, const Eigen::MatrixXd& t, bool radius)
        : ball_(ball), t_(t), radius_(radius), k_(active_kernels())
    {
    }

    void values(RowMat& x, std::vector<double>& out)
    {
        const Eigen::Index dim = ball_.dim();
        const std::size_t n = static_cast<std::size_t>(x.cols());
        out.assign(n, 0.0);
        if (n == 0)
            return;
        scratch_.assign(n, 0.0);
        gauge_.assign(n, -HUGE_VAL);
        y_.resize(dim, static_cast<Eigen::Index>(n));

        if (ball_.polytope()) {
            const Eigen::MatrixXd& normals = ball_.normals();
            for (Eigen::Index f = 0; f < normals.rows(); ++f) {
                row_dot(normals.row(f), x, scratch_);
                k_.rowmax(scratch_.data(), gauge_.data(), n);
            }
        } else {
            for (std::size_t b = 0; b < n; ++b) {
                Eigen::VectorXd col = x.col(static_cast<Eigen::Index>(b));
                gauge_[b] = lp_gauge(col.data(), dim, ball_.p());
            }
        }
        recip_.assign(n, 0.0);
        k_.recip(gauge_.data(), recip_.data(), n);
        for (Eigen::Index i = 0; i < dim; ++i)
            k_.mul_inplace(x.row(i).data(), recip_.data(), n);

        y_.setZero();
        for (Eigen::Index i = 0; i < dim; ++i)
            for (Eigen::Index j = 0; j < dim; ++j)
                if (t_(i, j) != 0.0)
                    k_.axpy(t_(i, j), x.row(j).data(), y_.row(i).data(), n);

        if (!radius_) {
            // Operator norm: the gauge of every image column.
            std::fill(out.begin(), out.end(), -HUGE_VAL);
            if (ball_.polytope()) {
                const Eigen::MatrixXd& normals = ball_.normals();
                for (Eigen::Index f = 0; f < normals.rows(); ++f) {
                    row_dot(normals.row(f), y_, scratch_);
                    k_.rowmax(scratch_.data(), out.data(), n);
                }
            } else {
                for (std::size_t b = 0; b < n; ++b) {
                    Eigen::VectorXd col = y_.col(static_cast<Eigen::Index>(b));
                    out[b] = lp_gauge(col.data(), dim, ball_.p());
                }
            }
            return;
        }

        if (ball_.polytope()) {
            const Eigen::MatrixXd& normals = ball_.normals();
            activity_.assign(n, 0.0);
            for (Eigen::Index f = 0; f < normals.rows(); ++f) {
                row_dot(normals.row(f), x, activity_);
                row_dot(normals.row(f), y_, scratch_);
                k_.masked_abs_max(activity_.data(), 1.0 - kGateTol,
                                  scratch_.data(), out.data(), n);
            }
            return;
        }

        // p > 1: the support functional of x is the p-norm gradient.  At
        // p = 1 the support face at x fixes the functional only on the
        // nonzero coordinates; over that face max |f(y)| splits into the
        // signed part plus the freely signed remainder.
        const double p = ball_.p();
        scratch_.assign(n, 0.0);
        if (p == 2.0) {
            for (Eigen::Index i = 0; i < dim; ++i)
                k_.madd(x.row(i).data(), y_.row(i).data(), scratch_.data(), n);
        } else if (p == 1.0) {
            grad_.assign(n, 0.0);
            for (Eigen::Index i = 0; i < dim; ++i) {
                const double* xi = x.row(i).data();
                const double* yi = y_.row(i).data();
                for (std::size_t b = 0; b < n; ++b) {
                    if (std::abs(xi[b]) <= kZeroCoord)
                        grad_[b] += std::abs(yi[b]);
                    else
                        scratch_[b] += (xi[b] > 0.0 ? yi[b] : -yi[b]);
                }
            }
            for (std::size_t b = 0; b < n; ++b)
                out[b] = std::abs(scratch_[b]) + grad_[b];
            return;
        } else {
            for (Eigen::Index i = 0; i < dim; ++i) {
                const double* xi = x.row(i).data();
                const double* yi = y_.row(i).data();
                for (std::size_t b = 0; b < n; ++b)
                    scratch_[b] +=
                        std::copysign(std::pow(std::abs(xi[b]), p - 1.0),
                                      xi[b]) *
                        yi[b];
            }
        }
        for (std::size_t b = 0; b < n; ++b)
            out[b] = std::abs(scratch_[b]);
    }

private:
    void row_dot(const Eigen::RowVectorXd& coeff, const RowMat& m,
                 std::vector<double>& dst)
    {
        const std::size_t n = dst.size();
        std::fill(dst.begin(), dst.end(), 0.0);
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (coeff(i) != 0.0)
                k_.axpy(coeff(i), m.row(i).data(), dst.data(), n);
    }

    const FloatBall& ball_;
    const Eigen::MatrixXd& t_;
    bool radius_;
    const Kernels& k_;
    RowMat y_;
    std::vector<double> scratch_, gauge_, recip_, activity_;
    std::vector<double> grad_;
};

RowMat mesh_directions(Eigen::Index dim, int level)
{
    using std::numbers::pi;
    if (dim == 1) {
        RowMat m(1, 2);
        m(0, 0) = 1.0;
        m(0, 1) = -1.0;
        return m;
    }
    if (dim == 2) {
        const Eigen::Index n = 512 << level;
        RowMat m(2, n);
        for (Eigen::Index j = 0; j < n; ++j) {
            const double a = 2.0 * pi * double(j) / double(n);
            m(0, j) = std::cos(a);
            m(1, j) = std::sin(a);
        }
        return m;
    }
    if (dim == 3) {
        const Eigen::Index nt = (24 << level) + 1;
        const Eigen::Index np = 48 << level;
        RowMat m(3, nt * np);
        Eigen::Index col = 0;
        for (Eigen::Index i = 0; i < nt; ++i) {
            const double theta = pi * double(i) / double(nt - 1);
            for (Eigen::Index j = 0; j < np; ++j) {
                const double phi = 2.0 * pi * double(j) / double(np);
                m(0, col) = std::sin(theta) * std::cos(phi);
                m(1, col) = std::sin(theta) * std::sin(phi);
                m(2, col) = std::cos(theta);
                ++col;
            }
        }
        return m;
    }
    // Higher dimensions: a fixed-seed quasi-random direction cloud; the
    // level only controls its size, and level values are accumulated by
    // the caller, which keeps the reported value monotone in density.
    const Eigen::Index n = Eigen::Index(2048) << level;
    std::mt19937_64 rng(0x6e756d696e646578ULL + static_cast<std::uint64_t>(level));
    std::normal_distribution<double> gauss(0.0, 1.0);
    RowMat m(dim, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (Eigen::Index i = 0; i < dim; ++i) {
                m(i, j) = gauss(rng);
                norm2 += m(i, j) * m(i, j);
            }
        } while (norm2 < 1e-12);
    }
    return m;
}

struct Candidate {
    double value;
    Eigen::VectorXd point;
};

}   // namespace

FloatBall::FloatBall(const Space& s)
    : dim_(s.dim()), polytope_(s.is_polytope())
{
    if (polytope_)
        normals_ = to_float(s.facet_normals());
    else
        p_ = s.p_exponent();
}

double FloatBall::gauge(const Eigen::VectorXd& x) const
{
    if (polytope_)
        return (normals_ * x).maxCoeff();
    return lp_gauge(x.data(), dim_, p_);
}

Eigen::VectorXd FloatBall::to_sphere(const Eigen::VectorXd& x) const
{
    const double g = gauge(x);
    if (!(g > 0.0))
        throw PreconditionError("cannot project the zero vector to the sphere");
    return x / g;
}

double FloatBall::point_value(const Eigen::MatrixXd& t,
                              const Eigen::VectorXd& unit) const
{
    const Eigen::VectorXd y = t * unit;
    if (polytope_) {
        double best = 0.0;
        for (Eigen::Index f = 0; f < normals_.rows(); ++f) {
            if (normals_.row(f).dot(unit) >= 1.0 - kGateTol)
                best = std::max(best, std::abs(normals_.row(f).dot(y)));
        }
        return best;
    }
    return std::abs(support_functional(unit, y).dot(y));
}

Eigen::VectorXd FloatBall::support_functional(const Eigen::VectorXd& unit,
                                              const Eigen::VectorXd& toward) const
{
    if (polytope_) {
        double best = -1.0;
        Eigen::Index arg = -1;
        for (Eigen::Index f = 0; f < normals_.rows(); ++f) {
            if (normals_.row(f).dot(unit) >= 1.0 - kGateTol) {
                const double v = std::abs(normals_.row(f).dot(toward));
                if (v > best) {
                    best = v;
                    arg = f;
                }
            }
        }
        if (arg < 0)
            throw PreconditionError("no active facet at the given point");
        return normals_.row(arg).transpose();
    }
    Eigen::VectorXd f(dim_);
    if (p_ == 1.0) {
        // Pin the signs on the nonzero coordinates, then give the free
        // coordinates the fill maximizing |f(toward)|.
        double pinned = 0.0;
        for (Eigen::Index i = 0; i < dim_; ++i)
            if (std::abs(unit(i)) > kZeroCoord)
                pinned += (unit(i) > 0.0 ? toward(i) : -toward(i));
        const double flip = pinned >= 0.0 ? 1.0 : -1.0;
        for (Eigen::Index i = 0; i < dim_; ++i) {
            if (std::abs(unit(i)) > kZeroCoord)
                f(i) = unit(i) > 0.0 ? 1.0 : -1.0;
            else
                f(i) = flip * (toward(i) >= 0.0 ? 1.0 : -1.0);
        }
        return f;
    }
    for (Eigen::Index i = 0; i < dim_; ++i)
        f(i) = std::copysign(std::pow(std::abs(unit(i)), p_ - 1.0), unit(i));
    return f;
}

namespace {

SampleReport sample_impl(const Space& s, const Eigen::MatrixXd& t, int density,
                         bool collect_top, bool radius)
{
    if (t.rows() != s.dim() || t.cols() != s.dim())
        throw PreconditionError("operator matrix does not match the space");
    if (density < 0 || density > 8)
        throw PreconditionError("density must lie in [0, 8]");

    const FloatBall ball(s);
    BatchEval eval(ball, t, radius);

    SampleReport report;
    report.density = density;
    std::vector<Candidate> seeds;
    std::vector<double> vals;

    for (int level = 0; level <= density; ++level) {
        RowMat x = mesh_directions(s.dim(), level);
        eval.values(x, vals);
        report.evaluations += static_cast<long>(vals.size());

        // Keep the best cells of the finest level as refinement seeds.
        std::vector<std::size_t> order(vals.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        const std::size_t keep = std::min<std::size_t>(8, order.size());
        std::partial_sort(order.begin(), order.begin() + keep, order.end(),
                          [&](std::size_t a, std::size_t b) {
                              return vals[a] > vals[b];
                          });
        if (level == density) {
            seeds.clear();
            for (std::size_t i = 0; i < keep; ++i)
                seeds.push_back({vals[order[i]],
                                 x.col(static_cast<Eigen::Index>(order[i]))});
        }
        if (report.argmax.size() == 0 || vals[order[0]] > report.value) {
            report.value = vals[order[0]];
            report.argmax = x.col(static_cast<Eigen::Index>(order[0]));
        }
    }

    // Pattern refinement: shrinking coordinate steps with renormalization.
    const double base_step =
        s.dim() <= 3 ? 8.0 / double(512 << density) : 0.05;
    for (Candidate& seed : seeds) {
        Eigen::VectorXd u = seed.point;
        double best = seed.value;
        double step = base_step;
        while (step > 1e-14) {
            RowMat cand(s.dim(), 2 * s.dim());
            for (Eigen::Index j = 0; j < s.dim(); ++j) {
                Eigen::VectorXd up = u, down = u;
                up(j) += step;
                down(j) -= step;
                cand.col(2 * j) = up;
                cand.col(2 * j + 1) = down;
            }
            eval.values(cand, vals);
            report.evaluations += static_cast<long>(vals.size());
            std::size_t arg = 0;
            for (std::size_t i = 1; i < vals.size(); ++i)
                if (vals[i] > vals[arg])
                    arg = i;
            if (vals[arg] > best) {
                best = vals[arg];
                u = cand.col(static_cast<Eigen::Index>(arg));
            } else {
                step *= 0.5;
            }
        }
        seed.value = best;
        seed.point = ball.to_sphere(u);
        if (best > report.value) {
            report.value = best;
            report.argmax = seed.point;
        }
    }

    if (collect_top) {
        for (const Candidate& seed : seeds) {
            if (seed.value >= report.value - 1e-7 * (1.0 + report.value))
                report.top_points.push_back(seed.point);
        }
    }
    if (report.argmax.size() == s.dim() && report.value > 0.0)
        report.argmax = ball.to_sphere(report.argmax);
    return report;
}

}   // namespace

SampleReport sample_radius(const Space& s, const Eigen::MatrixXd& t,
                           int density, bool collect_top)
{
    return sample_impl(s, t, density, collect_top, true);
}

SampleReport sample_op_norm(const Space& s, const Eigen::MatrixXd& t,
                            int density)
{
    return sample_impl(s, t, density, false, false);
}

Eigen::MatrixXd sphere_mesh(const Space& s, int level)
{
    if (level < 0 || level > 8)
        throw PreconditionError("mesh level must lie in [0, 8]");
    const FloatBall ball(s);
    RowMat m = mesh_directions(s.dim(), level);
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        out.col(j) = ball.to_sphere(m.col(j));
    return out;
}

}   // namespace numindex
