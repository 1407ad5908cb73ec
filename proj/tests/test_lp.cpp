#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "numindex/lp.hpp"
#include "numindex/rational.hpp"

using namespace numindex;

TEST_CASE("box maximum")
{
    LpProblem lp;
    lp.ub_a = rat_mat({{1, 0}, {0, 1}});
    lp.ub_b = rat_vec({1, 1});
    lp.objective = rat_vec({1, 1});
    lp.nonneg = {true, true};

    const LpResult r = lp_solve(lp);
    REQUIRE(r.optimal());
    CHECK(r.objective == 2);
    CHECK(r.x(0) == 1);
    CHECK(r.x(1) == 1);
}

TEST_CASE("free variables reach negative optima")
{
    LpProblem lp;
    lp.ub_a = rat_mat({{1}});
    lp.ub_b = rat_vec({-3});
    lp.objective = rat_vec({1});

    const LpResult r = lp_solve(lp);
    REQUIRE(r.optimal());
    CHECK(r.objective == -3);
    CHECK(r.x(0) == -3);
}

TEST_CASE("equality constraints")
{
    LpProblem lp;
    lp.eq_a = rat_mat({{1, 1}});
    lp.eq_b = rat_vec({1});
    lp.objective = rat_vec({1, 2});
    lp.nonneg = {true, true};

    const LpResult r = lp_solve(lp);
    REQUIRE(r.optimal());
    CHECK(r.objective == 2);
    CHECK(r.x(0) == 0);
    CHECK(r.x(1) == 1);
}

TEST_CASE("infeasible system detected")
{
    LpProblem lp;
    lp.eq_a = rat_mat({{1}});
    lp.eq_b = rat_vec({-1});
    lp.objective = rat_vec({1});
    lp.nonneg = {true};

    CHECK(lp_solve(lp).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded objective detected")
{
    LpProblem lp;
    lp.ub_a = rat_mat({{-1, 0}});
    lp.ub_b = rat_vec({0});
    lp.objective = rat_vec({1, 0});
    lp.nonneg = {true, true};

    CHECK(lp_solve(lp).status == LpStatus::Unbounded);
}

TEST_CASE("redundant equalities are dropped")
{
    LpProblem lp;
    lp.eq_a = rat_mat({{1, 1}, {2, 2}});
    lp.eq_b = rat_vec({1, 2});
    lp.objective = rat_vec({0, 1});
    lp.nonneg = {true, true};

    const LpResult r = lp_solve(lp);
    REQUIRE(r.optimal());
    CHECK(r.objective == 1);
}

TEST_CASE("classic cycling instance terminates at the optimum")
{
    // Beale's example: the textbook pivot rule cycles here, an
    // anti-cycling rule must not.
    LpProblem lp;
    lp.ub_a = rat_mat({{Rat(1, 4), -60, Rat(-1, 25), 9},
                       {Rat(1, 2), -90, Rat(-1, 50), 3},
                       {0, 0, 1, 0}});
    lp.ub_b = rat_vec({0, 0, 1});
    lp.objective = rat_vec({Rat(3, 4), -150, Rat(1, 50), -6});
    lp.nonneg = {true, true, true, true};

    const LpResult r = lp_solve(lp);
    REQUIRE(r.optimal());
    CHECK(r.objective == Rat(1, 20));
}

TEST_CASE("exact fractional optimum")
{
    LpProblem lp;
    lp.ub_a = rat_mat({{3, 1}, {1, 3}});
    lp.ub_b = rat_vec({1, 1});
    lp.objective = rat_vec({1, 1});
    lp.nonneg = {true, true};

    const LpResult r = lp_solve(lp);
    REQUIRE(r.optimal());
    CHECK(r.objective == Rat(1, 2));
    CHECK(r.x(0) == Rat(1, 4));
    CHECK(r.x(1) == Rat(1, 4));
}

TEST_CASE("convex membership inside a triangle")
{
    const RatMat pts = rat_mat({{0, 0}, {2, 0}, {0, 2}});
    const ConvexMembership m =
        convex_membership(rat_vec({Rat(1, 2), Rat(1, 2)}), pts);
    REQUIRE(m.inside);

    Rat total(0);
    RatVec combo = RatVec::Zero(2);
    for (const auto& [idx, weight] : m.coefficients) {
        CHECK(weight > 0);
        total += weight;
        combo += weight * pts.row(idx).transpose();
    }
    CHECK(total == 1);
    CHECK(combo(0) == Rat(1, 2));
    CHECK(combo(1) == Rat(1, 2));
    CHECK(m.coefficients.size() <= 3);
}

TEST_CASE("convex membership rejects outside points")
{
    const RatMat pts = rat_mat({{0, 0}, {1, 0}, {0, 1}});
    CHECK_FALSE(convex_membership(rat_vec({1, 1}), pts).inside);
    CHECK_FALSE(convex_membership(rat_vec({Rat(-1, 100), 0}), pts).inside);
}

TEST_CASE("membership on the boundary counts as inside")
{
    const RatMat pts = rat_mat({{0, 0}, {1, 0}, {0, 1}});
    CHECK(convex_membership(rat_vec({Rat(1, 2), Rat(1, 2)}), pts).inside);
    CHECK(convex_membership(rat_vec({1, 0}), pts).inside);
}

TEST_CASE("separation agrees with membership")
{
    const RatMat far = rat_mat({{1, 1}, {2, 1}, {1, 2}});
    const Separation sep = separate_origin(far);
    REQUIRE(sep.separated);
    CHECK(sep.margin > 0);
    for (Eigen::Index r = 0; r < far.rows(); ++r)
        CHECK(sep.direction.dot(far.row(r).transpose()) <= -sep.margin);
    CHECK_FALSE(convex_membership(RatVec(RatVec::Zero(2)), far).inside);

    const RatMat around = rat_mat({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    CHECK_FALSE(separate_origin(around).separated);
    CHECK(convex_membership(RatVec(RatVec::Zero(2)), around).inside);
}

TEST_CASE("separation normalizes direction entries")
{
    const RatMat pts = rat_mat({{Rat(1, 1000), Rat(1, 1000)}});
    const Separation sep = separate_origin(pts);
    REQUIRE(sep.separated);
    for (Eigen::Index j = 0; j < sep.direction.size(); ++j) {
        CHECK(sep.direction(j) <= 1);
        CHECK(sep.direction(j) >= -1);
    }
}
