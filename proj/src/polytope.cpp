#include "numindex/polytope.hpp"

#include "numindex/errors.hpp"

#include <algorithm>
#include <vector>

namespace numindex {

namespace {

using Bitset = std::vector<bool>;

bool subset(const Bitset& a, const Bitset& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] && !b[i])
            return false;
    }
    return true;
}

struct Generator {
    RatVec point;
    Bitset tight;
};

/** Tight set of `point` against the first `count` rows of (normals, offsets). */
Bitset tight_set(const RatVec& point, const RatMat& normals,
                 const RatVec& offsets, Eigen::Index count,
                 Eigen::Index capacity)
{
    Bitset t(static_cast<std::size_t>(capacity), false);
    for (Eigen::Index i = 0; i < count; ++i) {
        if (normals.row(i).dot(point) == offsets(i))
            t[static_cast<std::size_t>(i)] = true;
    }
    return t;
}

/**
 * Combinatorial edge test: u and w span an edge of the current polytope
 * iff no other current vertex is tight on every constraint that is tight
 * on both of them.
 */
bool adjacent(const std::vector<Generator>& gens, std::size_t u, std::size_t w)
{
    const Bitset& a = gens[u].tight;
    const Bitset& b = gens[w].tight;
    Bitset common(a.size(), false);
    std::size_t common_count = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] && b[i]) {
            common[i] = true;
            ++common_count;
        }
    }
    if (common_count + 1 < static_cast<std::size_t>(gens[u].point.size()))
        return false;
    for (std::size_t v = 0; v < gens.size(); ++v) {
        if (v == u || v == w)
            continue;
        if (subset(common, gens[v].tight))
            return false;
    }
    return true;
}

}   // namespace

HRep unit_hrep(const RatMat& normals)
{
    HRep h;
    h.normals = normals;
    h.offsets = RatVec::Constant(normals.rows(), Rat(1));
    return h;
}

bool full_dimensional(const HRep& h)
{
    // maximize t subject to normals·x + t <= offsets; a positive optimum
    // certifies an interior point.
    const Eigen::Index m = h.size(), d = h.dim();
    LpProblem lp;
    lp.ub_a = RatMat(m + 1, d + 1);
    lp.ub_a.block(0, 0, m, d) = h.normals;
    lp.ub_a.block(0, d, m, 1).setConstant(Rat(1));
    lp.ub_a.row(m).setZero();
    lp.ub_a(m, d) = 1;   // t <= 1 keeps the LP bounded
    lp.ub_b = RatVec(m + 1);
    lp.ub_b.head(m) = h.offsets;
    lp.ub_b(m) = 1;
    lp.objective = RatVec::Zero(d + 1);
    lp.objective(d) = 1;
    const LpResult r = lp_solve(lp);
    return r.optimal() && r.objective > 0;
}

RatMat enumerate_vertices(const HRep& h)
{
    const Eigen::Index d = h.dim();
    const Eigen::Index m = h.size();
    if (d < 1)
        throw PreconditionError("vertex enumeration needs dimension >= 1");
    if (!full_dimensional(h))
        throw PreconditionError(
            "vertex enumeration requires a full-dimensional region");

    // Coordinate bounds by exact LP; +/-1 of slack so the initial box is
    // strictly larger than the polytope and none of its facets survive.
    RatVec lo(d), hi(d);
    for (Eigen::Index j = 0; j < d; ++j) {
        LpProblem lp;
        lp.ub_a = h.normals;
        lp.ub_b = h.offsets;
        lp.objective = RatVec::Zero(d);
        lp.objective(j) = 1;
        LpResult up = lp_solve(lp);
        if (up.status == LpStatus::Unbounded)
            throw UnboundedInput("region unbounded along +e" +
                                 std::to_string(j));
        lp.objective(j) = -1;
        LpResult down = lp_solve(lp);
        if (down.status == LpStatus::Unbounded)
            throw UnboundedInput("region unbounded along -e" +
                                 std::to_string(j));
        if (!up.optimal() || !down.optimal())
            throw PreconditionError("empty region in vertex enumeration");
        hi(j) = up.objective + 1;
        lo(j) = -down.objective - 1;
    }

    // Constraint list: 2d box rows first, then the input rows, processed
    // in order.  Tight sets are indexed by this list.
    const Eigen::Index total = 2 * d + m;
    RatMat normals = RatMat::Zero(total, d);
    RatVec offsets(total);
    for (Eigen::Index j = 0; j < d; ++j) {
        normals(2 * j, j) = 1;
        offsets(2 * j) = hi(j);
        normals(2 * j + 1, j) = -1;
        offsets(2 * j + 1) = -lo(j);
    }
    normals.bottomRows(m) = h.normals;
    offsets.tail(m) = h.offsets;

    std::vector<Generator> gens;
    gens.reserve(std::size_t(1) << d);
    for (std::size_t mask = 0; mask < (std::size_t(1) << d); ++mask) {
        Generator g;
        g.point = RatVec(d);
        g.tight.assign(static_cast<std::size_t>(total), false);
        for (Eigen::Index j = 0; j < d; ++j) {
            const bool high = (mask >> j) & 1;
            g.point(j) = high ? hi(j) : lo(j);
            g.tight[static_cast<std::size_t>(high ? 2 * j : 2 * j + 1)] = true;
        }
        gens.push_back(std::move(g));
    }

    for (Eigen::Index cur = 2 * d; cur < total; ++cur) {
        std::vector<Rat> slack(gens.size());
        bool any_out = false;
        for (std::size_t v = 0; v < gens.size(); ++v) {
            slack[v] = normals.row(cur).dot(gens[v].point) - offsets(cur);
            if (slack[v] > 0)
                any_out = true;
        }
        if (!any_out) {
            for (std::size_t v = 0; v < gens.size(); ++v) {
                if (slack[v] == 0)
                    gens[v].tight[static_cast<std::size_t>(cur)] = true;
            }
            continue;
        }

        std::vector<Generator> next;
        next.reserve(gens.size());
        for (std::size_t v = 0; v < gens.size(); ++v) {
            if (slack[v] > 0)
                continue;
            Generator g = gens[v];
            if (slack[v] == 0)
                g.tight[static_cast<std::size_t>(cur)] = true;
            next.push_back(std::move(g));
        }

        std::vector<RatVec> crossings;
        for (std::size_t u = 0; u < gens.size(); ++u) {
            if (slack[u] >= 0)
                continue;
            for (std::size_t w = 0; w < gens.size(); ++w) {
                if (slack[w] <= 0)
                    continue;
                if (!adjacent(gens, u, w))
                    continue;
                const Rat t = slack[u] / (slack[u] - slack[w]);
                crossings.push_back(gens[u].point +
                                    t * (gens[w].point - gens[u].point));
            }
        }
        for (RatVec& p : sorted_unique(std::move(crossings))) {
            Generator g;
            g.tight = tight_set(p, normals, offsets, cur + 1, total);
            g.point = std::move(p);
            next.push_back(std::move(g));
        }
        gens = std::move(next);
        if (gens.empty())
            throw PreconditionError("region became empty during enumeration");
    }

    std::vector<RatVec> points;
    points.reserve(gens.size());
    for (auto& g : gens) {
        // The box strictly contains the polytope, so no box row may stay
        // tight on a surviving vertex.
        for (Eigen::Index j = 0; j < 2 * d; ++j) {
            if (g.tight[static_cast<std::size_t>(j)])
                throw UnboundedInput(
                    "bounding box active on an output vertex; "
                    "region is unbounded or ill-conditioned");
        }
        points.push_back(std::move(g.point));
    }
    return stack_rows(sorted_unique(std::move(points)), d);
}

bool lp_member(const RatVec& point, const HRep& h)
{
    if (point.size() != h.dim())
        throw PreconditionError("membership point has wrong dimension");
    for (Eigen::Index i = 0; i < h.size(); ++i) {
        if (h.normals.row(i).dot(point) > h.offsets(i))
            return false;
    }
    return true;
}

bool lp_member(const RatVec& point, const RatMat& vrep_rows)
{
    return convex_membership(point, vrep_rows).inside;
}

RatMat canonical_hull(const RatMat& candidate_rows)
{
    std::vector<RatVec> rows = sorted_unique(split_rows(candidate_rows));
    const Eigen::Index d = candidate_rows.cols();

    std::vector<RatVec> extreme;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        RatMat others(static_cast<Eigen::Index>(rows.size()) - 1, d);
        Eigen::Index r = 0;
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (j != i)
                others.row(r++) = rows[j].transpose();
        }
        if (others.rows() == 0 || !lp_member(rows[i], others))
            extreme.push_back(rows[i]);
    }
    return stack_rows(extreme, d);
}

}   // namespace numindex
