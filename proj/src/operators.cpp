#include "numindex/operators.hpp"

#include "numindex/errors.hpp"

namespace numindex {

namespace {

void require_square(const Space& s, Eigen::Index rows, Eigen::Index cols)
{
    if (rows != s.dim() || cols != s.dim())
        throw PreconditionError(
            "operator matrix must be " + std::to_string(s.dim()) + "x" +
            std::to_string(s.dim()) + " for space '" + s.name() + "'");
}

void require_exact(const Operator& t, const char* what)
{
    if (!t.exact())
        throw PreconditionError(
            std::string(what) +
            " needs rational entries on a polytope space; "
            "use the sampling routines instead");
}

}   // namespace

Operator::Operator(const Space& space, RatMat entries)
    : space_(&space), entries_exact_(true), rational_(std::move(entries))
{
    require_square(space, rational_.rows(), rational_.cols());
    float_ = to_float(rational_);
}

Operator::Operator(const Space& space, Eigen::MatrixXd entries)
    : space_(&space), entries_exact_(false), float_(std::move(entries))
{
    require_square(space, float_.rows(), float_.cols());
}

Operator Operator::identity(const Space& space)
{
    RatMat m = RatMat::Zero(space.dim(), space.dim());
    for (Eigen::Index i = 0; i < space.dim(); ++i)
        m(i, i) = 1;
    return Operator(space, std::move(m));
}

Operator Operator::zero(const Space& space)
{
    return Operator(space, RatMat(RatMat::Zero(space.dim(), space.dim())));
}

const RatMat& Operator::rational() const
{
    if (!entries_exact_)
        throw PreconditionError("operator has float entries only");
    return rational_;
}

RatVec Operator::apply(const RatVec& x) const
{
    if (x.size() != dim())
        throw PreconditionError("operator applied to wrong dimension");
    return rational() * x;
}

std::vector<AdmissiblePair> admissible_pairs(const Space& s)
{
    if (!s.is_polytope())
        throw PreconditionError("admissible pairs exist on polytope spaces only");
    const RatMat& points = s.vertices();
    const RatMat& duals = s.facet_normals();
    std::vector<AdmissiblePair> pairs;
    for (Eigen::Index v = 0; v < points.rows(); ++v) {
        for (Eigen::Index f = 0; f < duals.rows(); ++f) {
            const Rat value = duals.row(f).dot(points.row(v));
            if (value == 1 || value == -1)
                pairs.push_back({points.row(v).transpose(),
                                 duals.row(f).transpose(),
                                 value == 1 ? 1 : -1});
        }
    }
    return pairs;
}

Rat op_norm(const Operator& t)
{
    require_exact(t, "exact operator norm");
    const Space& s = t.space();
    const RatMat& points = s.vertices();
    Rat best(0);
    for (Eigen::Index v = 0; v < points.rows(); ++v) {
        const RatVec image = t.rational() * points.row(v).transpose();
        const Rat n = norm(s, image);
        if (n > best)
            best = n;
    }
    return best;
}

Rat numerical_radius(const Operator& t)
{
    require_exact(t, "exact numerical radius");
    const Space& s = t.space();
    const RatMat& points = s.vertices();
    const RatMat& duals = s.facet_normals();
    Rat best(0);
    for (Eigen::Index v = 0; v < points.rows(); ++v) {
        const RatVec image = t.rational() * points.row(v).transpose();
        for (Eigen::Index f = 0; f < duals.rows(); ++f) {
            const Rat pairing = duals.row(f).dot(points.row(v));
            if (pairing != 1 && pairing != -1)
                continue;
            Rat value = duals.row(f).dot(image);
            if (value < 0)
                value = -value;
            if (value > best)
                best = value;
        }
    }
    return best;
}

RangeReport numerical_range(const Operator& t)
{
    require_exact(t, "numerical range");
    const Space& s = t.space();
    const RatMat& points = s.vertices();
    const RatMat& duals = s.facet_normals();

    RangeReport report;
    bool first_global = true;
    for (Eigen::Index f = 0; f < duals.rows(); ++f) {
        FacetInterval interval;
        interval.functional = duals.row(f).transpose();
        bool first = true;
        for (Eigen::Index v = 0; v < points.rows(); ++v) {
            if (duals.row(f).dot(points.row(v)) != 1)
                continue;
            const Rat value =
                duals.row(f).dot(t.rational() * points.row(v).transpose());
            if (first || value < interval.lo)
                interval.lo = value;
            if (first || value > interval.hi)
                interval.hi = value;
            first = false;
        }
        if (first)
            continue;   // dual vertex exposing no primal vertex cannot occur
        if (first_global || interval.lo < report.lo)
            report.lo = interval.lo;
        if (first_global || interval.hi > report.hi)
            report.hi = interval.hi;
        first_global = false;
        report.facets.push_back(std::move(interval));
    }
    report.radius = report.hi;
    if (-report.lo > report.radius)
        report.radius = -report.lo;
    return report;
}

}   // namespace numindex
