#include "numindex/attainment.hpp"

#include "numindex/errors.hpp"

#include <algorithm>

namespace numindex {

AttainmentSet attainment_set(const Operator& t)
{
    if (!t.exact())
        throw PreconditionError(
            "attainment sets need rational entries on a polytope space");
    AttainmentSet out;
    out.radius = numerical_radius(t);
    if (out.radius == 0)
        throw ZeroRadius("attainment signs are undefined at radius zero");

    for (const AdmissiblePair& pair : admissible_pairs(t.space())) {
        Rat value = pair.functional.dot(t.rational() * pair.point);
        if (value != out.radius && value != -out.radius)
            continue;
        AttainmentEntry entry;
        entry.point = pair.sign == 1 ? pair.point : RatVec(-pair.point);
        entry.functional = pair.functional;
        // value refers to the raw vertex; normalizing the point by sigma
        // multiplies it by sigma as well.
        const Rat normalized = pair.sign == 1 ? value : Rat(-value);
        entry.sign = normalized == out.radius ? 1 : -1;
        out.entries.push_back(std::move(entry));
    }

    std::sort(out.entries.begin(), out.entries.end(),
              [](const AttainmentEntry& a, const AttainmentEntry& b) {
                  const int c = lex_compare(a.point, b.point);
                  if (c != 0)
                      return c < 0;
                  return lex_less(a.functional, b.functional);
              });
    out.entries.erase(
        std::unique(out.entries.begin(), out.entries.end(),
                    [](const AttainmentEntry& a, const AttainmentEntry& b) {
                        return lex_compare(a.point, b.point) == 0 &&
                               lex_compare(a.functional, b.functional) == 0;
                    }),
        out.entries.end());
    return out;
}

BjReport bj_orthogonal_w(const Operator& t, const std::vector<RatMat>& w_ops)
{
    if (w_ops.empty())
        throw PreconditionError("orthogonality needs a nonempty perturbation list");
    const Eigen::Index n = t.dim();
    for (const RatMat& a : w_ops) {
        if (a.rows() != n || a.cols() != n)
            throw PreconditionError("perturbation operator has wrong shape");
    }

    const AttainmentSet attained = attainment_set(t);
    const Eigen::Index k = static_cast<Eigen::Index>(w_ops.size());

    RatMat values(static_cast<Eigen::Index>(attained.entries.size()), k);
    for (Eigen::Index e = 0; e < values.rows(); ++e) {
        const AttainmentEntry& entry =
            attained.entries[static_cast<std::size_t>(e)];
        for (Eigen::Index j = 0; j < k; ++j) {
            const RatVec image =
                w_ops[static_cast<std::size_t>(j)] * entry.point;
            values(e, j) = Rat(entry.sign) * entry.functional.dot(image);
        }
    }

    BjReport report;
    report.radius_before = attained.radius;

    const ConvexMembership membership =
        convex_membership(RatVec(RatVec::Zero(k)), values);
    if (membership.inside) {
        report.orthogonal = true;
        report.coefficients = membership.coefficients;
        return report;
    }

    const Separation sep = separate_origin(values);
    if (!sep.separated)
        throw CertificationFailure(
            "separation and membership disagree on the attainment hull", {});

    RatMat perturbation = RatMat::Zero(n, n);
    for (Eigen::Index j = 0; j < k; ++j)
        perturbation += sep.direction(j) * w_ops[static_cast<std::size_t>(j)];

    // The radius along T + eps*P is a maximum of finitely many affine
    // functions of eps whose active branches all start strictly downhill,
    // so halving must eventually dip below the starting radius.
    Rat eps(1);
    for (int iter = 0; iter < 256; ++iter) {
        const Operator moved(t.space(), RatMat(t.rational() + eps * perturbation));
        const Rat radius = numerical_radius(moved);
        if (radius < attained.radius) {
            report.orthogonal = false;
            report.direction = sep.direction;
            report.step = eps;
            report.radius_after = radius;
            return report;
        }
        eps /= 2;
    }
    throw CertificationFailure(
        "no descent step found along a certified descent direction", {});
}

Operator rank_one_spear(const Space& s, const RatVec& point,
                        const RatVec& functional, int mu)
{
    if (!s.is_polytope())
        throw PreconditionError(
            "exact rank-one construction needs a polytope space; "
            "use the float overload for Lp spaces");
    if (mu != 1 && mu != -1)
        throw PreconditionError("mu must be +1 or -1");
    if (norm(s, point) != 1)
        throw PreconditionError("rank-one point is not on the unit sphere");

    Rat dual_norm(0);
    const RatMat& vertices = s.vertices();
    for (Eigen::Index v = 0; v < vertices.rows(); ++v) {
        Rat value = functional.dot(vertices.row(v).transpose());
        if (value < 0)
            value = -value;
        if (value > dual_norm)
            dual_norm = value;
    }
    if (dual_norm != 1)
        throw PreconditionError("rank-one functional is not on the dual sphere");
    if (functional.dot(point) != mu)
        throw PreconditionError("pairing x*(x) does not equal mu");

    RatMat m(s.dim(), s.dim());
    for (Eigen::Index i = 0; i < s.dim(); ++i)
        for (Eigen::Index j = 0; j < s.dim(); ++j)
            m(i, j) = point(i) * functional(j);
    return Operator(s, std::move(m));
}

Operator rank_one_spear(const Space& s, const Eigen::VectorXd& point,
                        const Eigen::VectorXd& functional, int mu, double eps)
{
    if (mu != 1 && mu != -1)
        throw PreconditionError("mu must be +1 or -1");
    if (std::abs(norm(s, point) - 1.0) > eps)
        throw PreconditionError("rank-one point is not on the unit sphere");
    const double pairing = functional.dot(point);
    if (std::abs(pairing - mu) > eps)
        throw PreconditionError("pairing x*(x) does not equal mu");

    return Operator(s, Eigen::MatrixXd(point * functional.transpose()));
}

bool nu_smooth(const Operator& t)
{
    const AttainmentSet attained = attainment_set(t);

    std::vector<RatVec> tensors;
    for (const AttainmentEntry& entry : attained.entries) {
        const TensorFunctional tf =
            TensorFunctional::from_pair(entry.point, entry.functional);
        tensors.push_back(entry.sign == 1 ? tf.flat() : RatVec(-tf.flat()));
    }
    return sorted_unique(std::move(tensors)).size() == 1;
}

bool exposed_point_check(const Space& s, const TensorFunctional& tf)
{
    const std::vector<TensorFunctional> m = build_M(s);
    const RatVec target = tf.flat();
    const Eigen::Index ambient = s.dim() * s.dim();

    bool found = false;
    std::vector<RatVec> others;
    for (const TensorFunctional& candidate : m) {
        const RatVec flat = candidate.flat();
        if (lex_compare(flat, target) == 0)
            found = true;
        else
            others.push_back(flat);
    }
    if (!found)
        throw PreconditionError(
            "tensor is not among the admissible extreme candidates");
    if (others.empty())
        return true;

    // Variables (H, delta): maximize delta subject to
    // <H, G'> - <H, G> + delta <= 0 for all other G', entries of H in
    // [-1, 1].  A positive optimum exhibits a functional whose maximum
    // over the dual ball is attained at G alone.
    const Eigen::Index rows = static_cast<Eigen::Index>(others.size());
    LpProblem lp;
    lp.ub_a = RatMat::Zero(rows + 2 * ambient, ambient + 1);
    lp.ub_b = RatVec::Zero(rows + 2 * ambient);
    for (Eigen::Index r = 0; r < rows; ++r) {
        lp.ub_a.block(r, 0, 1, ambient) =
            (others[static_cast<std::size_t>(r)] - target).transpose();
        lp.ub_a(r, ambient) = 1;
    }
    for (Eigen::Index j = 0; j < ambient; ++j) {
        lp.ub_a(rows + 2 * j, j) = 1;
        lp.ub_b(rows + 2 * j) = 1;
        lp.ub_a(rows + 2 * j + 1, j) = -1;
        lp.ub_b(rows + 2 * j + 1) = 1;
    }
    lp.objective = RatVec::Zero(ambient + 1);
    lp.objective(ambient) = 1;

    const LpResult r = lp_solve(lp);
    if (!r.optimal())
        throw PreconditionError("exposedness LP failed to solve");
    return r.objective > 0;
}

}   // namespace numindex
