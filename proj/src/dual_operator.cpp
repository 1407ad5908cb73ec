#include "numindex/dual_operator.hpp"

#include "numindex/errors.hpp"

#include <algorithm>

namespace numindex {

namespace {

std::string flat_to_string(const RatVec& flat)
{
    std::string out = "[";
    for (Eigen::Index i = 0; i < flat.size(); ++i) {
        if (i)
            out += ", ";
        out += to_fraction(flat(i));
    }
    return out + "]";
}

RatMat flats_matrix(const std::vector<TensorFunctional>& tensors,
                    Eigen::Index ambient)
{
    RatMat m(static_cast<Eigen::Index>(tensors.size()), ambient);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        m.row(i) = tensors[static_cast<std::size_t>(i)].flat().transpose();
    return m;
}

std::vector<TensorFunctional> tensors_from_pairs(const Space& s,
                                                 bool admissible_only)
{
    const RatMat& points = s.vertices();
    const RatMat& duals = s.facet_normals();
    std::vector<TensorFunctional> tensors;
    for (Eigen::Index v = 0; v < points.rows(); ++v) {
        for (Eigen::Index f = 0; f < duals.rows(); ++f) {
            if (admissible_only) {
                const Rat pairing = duals.row(f).dot(points.row(v));
                if (pairing != 1 && pairing != -1)
                    continue;
            }
            tensors.push_back(TensorFunctional::from_pair(
                points.row(v).transpose(), duals.row(f).transpose()));
        }
    }
    return dedup_by_G(tensors);
}

}   // namespace

TensorFunctional TensorFunctional::from_pair(RatVec point, RatVec functional)
{
    TensorFunctional tf;
    tf.outer = RatMat(functional.size(), point.size());
    for (Eigen::Index i = 0; i < functional.size(); ++i)
        for (Eigen::Index j = 0; j < point.size(); ++j)
            tf.outer(i, j) = functional(i) * point(j);
    tf.point = std::move(point);
    tf.functional = std::move(functional);
    return tf;
}

Rat TensorFunctional::apply(const RatMat& t) const
{
    if (t.rows() != outer.rows() || t.cols() != outer.cols())
        throw PreconditionError("trace pairing with mismatched matrix");
    Rat acc(0);
    for (Eigen::Index i = 0; i < outer.rows(); ++i)
        for (Eigen::Index j = 0; j < outer.cols(); ++j)
            acc += outer(i, j) * t(i, j);
    return acc;
}

RatVec TensorFunctional::flat() const
{
    RatVec v(outer.rows() * outer.cols());
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < outer.rows(); ++i)
        for (Eigen::Index j = 0; j < outer.cols(); ++j)
            v(k++) = outer(i, j);
    return v;
}

std::vector<TensorFunctional>
dedup_by_G(const std::vector<TensorFunctional>& tensors)
{
    std::vector<TensorFunctional> sorted = tensors;
    std::sort(sorted.begin(), sorted.end(),
              [](const TensorFunctional& a, const TensorFunctional& b) {
                  const int c = lex_compare(a.flat(), b.flat());
                  if (c != 0)
                      return c < 0;
                  const int cp = lex_compare(a.point, b.point);
                  if (cp != 0)
                      return cp < 0;
                  return lex_less(a.functional, b.functional);
              });
    sorted.erase(std::unique(sorted.begin(), sorted.end(),
                             [](const TensorFunctional& a,
                                const TensorFunctional& b) {
                                 return lex_compare(a.flat(), b.flat()) == 0;
                             }),
                 sorted.end());
    return sorted;
}

std::vector<TensorFunctional> build_M(const Space& s)
{
    return tensors_from_pairs(s, true);
}

std::vector<TensorFunctional> build_A(const Space& s)
{
    return tensors_from_pairs(s, false);
}

OperatorBallPolytope::OperatorBallPolytope(Eigen::Index dim, RatMat normal_rows)
    : dim_(dim), normals_(std::move(normal_rows))
{
    if (normals_.cols() != dim_ * dim_)
        throw PreconditionError("operator ball normals have wrong width");
}

const RatMat& OperatorBallPolytope::vertex_rows()
{
    if (!vertices_)
        vertices_ = enumerate_vertices(unit_hrep(normals_));
    return *vertices_;
}

OperatorBallPolytope w_ball(const Space& s)
{
    const std::vector<TensorFunctional> m = build_M(s);
    RatMat normals = flats_matrix(m, s.dim() * s.dim());
    if (rat_rank(normals) < s.dim() * s.dim())
        throw DegenerateSeminorm(
            "numerical radius vanishes on a nonzero operator; "
            "the radius ball of '" + s.name() + "' is unbounded");
    return OperatorBallPolytope(s.dim(), std::move(normals));
}

OperatorBallPolytope op_ball(const Space& s)
{
    const std::vector<TensorFunctional> a = build_A(s);
    return OperatorBallPolytope(s.dim(), flats_matrix(a, s.dim() * s.dim()));
}

ExtremeDualReport extreme_dual_w(const Space& s, bool full_enumeration)
{
    ExtremeDualReport report;
    report.extremes = build_M(s);
    const Eigen::Index ambient = s.dim() * s.dim();
    const RatMat flats = flats_matrix(report.extremes, ambient);

    // Every candidate must be a vertex of the hull of the whole list.
    std::vector<std::string> failures;
    for (Eigen::Index i = 0; i < flats.rows(); ++i) {
        RatMat others(flats.rows() - 1, ambient);
        Eigen::Index r = 0;
        for (Eigen::Index j = 0; j < flats.rows(); ++j) {
            if (j != i)
                others.row(r++) = flats.row(j);
        }
        if (lp_member(flats.row(i).transpose(), others))
            failures.push_back(flat_to_string(flats.row(i).transpose()));
    }
    if (!failures.empty())
        throw CertificationFailure(
            "admissible tensors are not all extreme in their hull",
            std::move(failures));
    report.lp_certified = true;

    if (full_enumeration) {
        OperatorBallPolytope ball = w_ball(s);
        const RatMat& ball_vertices = ball.vertex_rows();
        const RatMat polar_vertices =
            enumerate_vertices(unit_hrep(ball_vertices));

        const std::vector<RatVec> got = split_rows(polar_vertices);
        const std::vector<RatVec> expected = split_rows(flats);
        std::vector<RatVec> missing, extra;
        std::set_difference(expected.begin(), expected.end(), got.begin(),
                            got.end(), std::back_inserter(missing), lex_less);
        std::set_difference(got.begin(), got.end(), expected.begin(),
                            expected.end(), std::back_inserter(extra),
                            lex_less);
        if (!missing.empty() || !extra.empty()) {
            std::vector<std::string> difference;
            for (const RatVec& v : missing)
                difference.push_back("missing " + flat_to_string(v));
            for (const RatVec& v : extra)
                difference.push_back("extra " + flat_to_string(v));
            throw CertificationFailure(
                "admissible tensors and enumerated polar vertices differ",
                std::move(difference));
        }
        report.enumeration_certified = true;
    }
    return report;
}

CountReport count_extremes(const Space& s)
{
    CountReport report;
    report.pair_count = static_cast<long>(admissible_pairs(s).size());

    const RatMat& points = s.vertices();
    for (Eigen::Index v = 0; v < points.rows(); ++v) {
        const SupportSet face = support_set(s, points.row(v).transpose(), 1);
        report.formula_value += 2 * static_cast<long>(face.functionals.rows());
    }

    report.distinct_count = static_cast<long>(build_M(s).size());
    return report;
}

HullEquality verify_hull_equality(const Space& s)
{
    HullEquality result;
    const Eigen::Index ambient = s.dim() * s.dim();

    const std::vector<TensorFunctional> m = build_M(s);
    OperatorBallPolytope radius_ball = w_ball(s);

    // Polar of the radius ball vs hull of admissible tensors.  One
    // inclusion is convex duality (the ball is cut out by exactly these
    // functionals); the other is certified by maximizing every tensor
    // over the ball and demanding the optimum one, exactly.
    result.w_dual_eq = true;
    for (const TensorFunctional& tf : m) {
        LpProblem lp;
        lp.ub_a = radius_ball.normals();
        lp.ub_b = RatVec::Constant(lp.ub_a.rows(), Rat(1));
        lp.objective = tf.flat();
        const LpResult r = lp_solve(lp);
        if (!r.optimal() || r.objective != 1) {
            result.w_dual_eq = false;
            break;
        }
    }

    // Polar of the operator-norm ball vs the same hull: every
    // non-admissible (vertex, dual vertex) tensor must lie inside.
    const RatMat m_flats = flats_matrix(m, ambient);
    std::vector<RatVec> m_keys = split_rows(m_flats);
    result.op_dual_eq = true;
    for (const TensorFunctional& tf : build_A(s)) {
        const RatVec key = tf.flat();
        if (std::binary_search(m_keys.begin(), m_keys.end(), key, lex_less))
            continue;
        if (!lp_member(key, m_flats)) {
            result.op_dual_eq = false;
            break;
        }
    }
    return result;
}

}   // namespace numindex
