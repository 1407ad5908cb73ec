#include "numindex/geometry.hpp"

#include "numindex/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace numindex {

namespace {

void require_polytope(const Space& s, const char* what)
{
    if (!s.is_polytope())
        throw PreconditionError(std::string(what) +
                                " requires a polytope space, got Lp space '" +
                                s.name() + "'");
}

void require_dim(const Space& s, Eigen::Index got, const char* what)
{
    if (got != s.dim())
        throw PreconditionError(std::string(what) + ": vector of dimension " +
                                std::to_string(got) + " in space of dimension " +
                                std::to_string(s.dim()));
}

}   // namespace

Space Space::polytope(std::string name, const RatMat& vertex_rows)
{
    if (vertex_rows.rows() == 0 || vertex_rows.cols() == 0)
        throw PreconditionError("polytope space needs a nonempty vertex list");
    const Eigen::Index d = vertex_rows.cols();

    std::vector<RatVec> rows = sorted_unique(split_rows(vertex_rows));
    for (const RatVec& v : rows) {
        const RatVec neg = -v;
        if (!std::binary_search(rows.begin(), rows.end(), neg, lex_less))
            throw PreconditionError("vertex set is not symmetric: missing -(" +
                                    to_fraction(v(0)) + ", ...)");
    }
    if (rat_rank(stack_rows(rows, d)) < d)
        throw DegenerateSeminorm(
            "vertex set does not span the space; the gauge is a seminorm");

    Space s;
    s.name_ = std::move(name);
    s.kind_ = SpaceKind::Polytope;
    s.dim_ = d;
    s.vertices_ = canonical_hull(stack_rows(rows, d));
    s.facet_normals_ = enumerate_vertices(unit_hrep(s.vertices_));
    return s;
}

Space Space::lp_space(std::string name, Eigen::Index dim, double p)
{
    if (dim < 1)
        throw PreconditionError("Lp space needs dimension >= 1");
    if (!(p >= 1.0) || !std::isfinite(p))
        throw PreconditionError("Lp exponent must be a finite real >= 1");
    Space s;
    s.name_ = std::move(name);
    s.kind_ = SpaceKind::Lp;
    s.dim_ = dim;
    s.p_ = p;
    return s;
}

Space Space::cube(Eigen::Index dim)
{
    if (dim < 1 || dim > 20)
        throw PreconditionError("cube dimension out of range");
    RatMat rows(Eigen::Index(1) << dim, dim);
    for (Eigen::Index mask = 0; mask < rows.rows(); ++mask)
        for (Eigen::Index j = 0; j < dim; ++j)
            rows(mask, j) = ((mask >> j) & 1) ? Rat(1) : Rat(-1);
    return polytope("linf:" + std::to_string(dim), rows);
}

Space Space::cross_polytope(Eigen::Index dim)
{
    if (dim < 1)
        throw PreconditionError("cross-polytope dimension out of range");
    RatMat rows = RatMat::Zero(2 * dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        rows(2 * j, j) = 1;
        rows(2 * j + 1, j) = -1;
    }
    return polytope("l1:" + std::to_string(dim), rows);
}

Space Space::octagon()
{
    const Rat c(2, 3);
    return polytope("octagon", rat_mat({{1, 0},
                                        {-1, 0},
                                        {0, 1},
                                        {0, -1},
                                        {c, c},
                                        {c, -c},
                                        {-c, c},
                                        {-c, -c}}));
}

double Space::p_exponent() const
{
    if (kind_ != SpaceKind::Lp)
        throw PreconditionError("p_exponent is only defined for Lp spaces");
    return p_;
}

const RatMat& Space::vertices() const
{
    if (kind_ != SpaceKind::Polytope)
        throw PreconditionError("Lp space '" + name_ +
                                "' has no vertex list");
    return vertices_;
}

const RatMat& Space::facet_normals() const
{
    if (kind_ != SpaceKind::Polytope)
        throw PreconditionError("Lp space '" + name_ +
                                "' has no facet description");
    return facet_normals_;
}

Rat norm(const Space& s, const RatVec& x)
{
    require_polytope(s, "exact norm");
    require_dim(s, x.size(), "norm");
    Rat best(0);
    const RatMat& normals = s.facet_normals();
    for (Eigen::Index i = 0; i < normals.rows(); ++i) {
        const Rat v = normals.row(i).dot(x);
        if (v > best)
            best = v;
    }
    return best;
}

double norm(const Space& s, const Eigen::VectorXd& x)
{
    require_dim(s, x.size(), "norm");
    if (s.is_polytope()) {
        const Eigen::MatrixXd normals = to_float(s.facet_normals());
        return (normals * x).maxCoeff();
    }
    const double p = s.p_exponent();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        acc += std::pow(std::abs(x(i)), p);
    return std::pow(acc, 1.0 / p);
}

Space dualize(const Space& s)
{
    if (s.is_polytope())
        return Space::polytope(s.name() + "*", s.facet_normals());
    const double p = s.p_exponent();
    if (p == 1.0)
        return Space::cube(s.dim());
    return Space::lp_space(s.name() + "*", s.dim(), p / (p - 1.0));
}

ExtremePoints extreme_points(const Space& s)
{
    ExtremePoints out;
    if (s.is_polytope()) {
        out.points = s.vertices();
        return out;
    }
    if (s.p_exponent() == 1.0) {
        RatMat rows = RatMat::Zero(2 * s.dim(), s.dim());
        for (Eigen::Index j = 0; j < s.dim(); ++j) {
            rows(2 * j, j) = 1;
            rows(2 * j + 1, j) = -1;
        }
        out.points = canonical_hull(rows);
        return out;
    }
    out.whole_sphere = true;
    return out;
}

SupportSet support_set(const Space& s, const RatVec& x, int mu)
{
    require_polytope(s, "support_set");
    require_dim(s, x.size(), "support_set");
    if (mu != 1 && mu != -1)
        throw PreconditionError("support_set: mu must be +1 or -1");
    if (norm(s, x) != 1)
        throw PreconditionError("support_set: point is not on the unit sphere");

    const RatMat& duals = s.facet_normals();
    std::vector<RatVec> hits;
    for (Eigen::Index i = 0; i < duals.rows(); ++i) {
        if (duals.row(i).dot(x) == mu)
            hits.push_back(duals.row(i).transpose());
    }
    SupportSet out;
    out.point = x;
    out.mu = mu;
    out.functionals = stack_rows(sorted_unique(std::move(hits)), s.dim());
    return out;
}

bool is_smooth_point(const Space& s, const RatVec& x)
{
    return support_set(s, x, 1).functionals.rows() == 1;
}

bool is_smooth_space(const Space& s)
{
    if (s.is_polytope())
        return s.dim() == 1;
    return s.p_exponent() > 1.0;
}

bool is_strictly_convex(const Space& s)
{
    if (s.is_polytope())
        return s.dim() == 1;
    return s.p_exponent() > 1.0;
}

}   // namespace numindex
