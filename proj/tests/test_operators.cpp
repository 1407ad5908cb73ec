#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "numindex/errors.hpp"
#include "numindex/operators.hpp"

#include <random>

using namespace numindex;

namespace {

RatMat random_op(std::mt19937_64& rng, Eigen::Index dim)
{
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den(1, 4);
    RatMat m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            m(i, j) = Rat(num(rng), den(rng));
    return m;
}

}   // namespace

TEST_CASE("identity has norm and radius one")
{
    for (const Space& s : {Space::cube(2), Space::cross_polytope(3),
                           Space::octagon()}) {
        const Operator id = Operator::identity(s);
        CHECK(op_norm(id) == 1);
        CHECK(numerical_radius(id) == 1);
        CHECK(op_norm(Operator::zero(s)) == 0);
        CHECK(numerical_radius(Operator::zero(s)) == 0);
    }
}

TEST_CASE("hand-checked values on the max-norm plane")
{
    const Space s = Space::cube(2);

    const Operator swap(s, rat_mat({{0, 1}, {1, 0}}));
    CHECK(op_norm(swap) == 1);
    CHECK(numerical_radius(swap) == 1);

    const Operator shear(s, rat_mat({{1, 1}, {0, 1}}));
    CHECK(op_norm(shear) == 2);
    CHECK(numerical_radius(shear) == 2);

    const Operator half(s, rat_mat({{Rat(1, 2), 0}, {0, Rat(1, 3)}}));
    CHECK(op_norm(half) == Rat(1, 2));
    CHECK(numerical_radius(half) == Rat(1, 2));
}

TEST_CASE("rotation on the octagon separates radius from norm")
{
    const Space s = Space::octagon();
    const Operator rot(s, rat_mat({{0, -1}, {1, 0}}));
    const Rat w = numerical_radius(rot);
    const Rat n = op_norm(rot);
    CHECK(w < n);
    CHECK(w > 0);
}

TEST_CASE("admissible pairs pair vertices with dual vertices")
{
    const Space s = Space::cube(2);
    const std::vector<AdmissiblePair> pairs = admissible_pairs(s);
    REQUIRE(pairs.size() == 16);
    for (const AdmissiblePair& p : pairs) {
        CHECK((p.sign == 1 || p.sign == -1));
        CHECK(p.functional.dot(p.point) == p.sign);
        CHECK(norm(s, p.point) == 1);
    }

    CHECK(admissible_pairs(Space::cube(3)).size() == 48);
    CHECK(admissible_pairs(Space::cross_polytope(3)).size() == 48);
    CHECK(admissible_pairs(Space::octagon()).size() == 32);
}

TEST_CASE("radius invariants on random operators")
{
    std::mt19937_64 rng(29);
    for (const Space& s : {Space::cube(2), Space::octagon()}) {
        for (int trial = 0; trial < 25; ++trial) {
            const RatMat a = random_op(rng, s.dim());
            const RatMat b = random_op(rng, s.dim());
            const Operator ta(s, a);
            const Operator tb(s, b);

            const Rat wa = numerical_radius(ta);
            CHECK(wa <= op_norm(ta));
            CHECK(numerical_radius(Operator(s, RatMat(a + b))) <=
                  wa + numerical_radius(tb));
            CHECK(numerical_radius(Operator(s, RatMat(Rat(-5, 2) * a))) ==
                  Rat(5, 2) * wa);
            CHECK(op_norm(Operator(s, RatMat(Rat(-5, 2) * a))) ==
                  Rat(5, 2) * op_norm(ta));
        }
    }
}

TEST_CASE("range endpoints and radius")
{
    const Space s = Space::cube(2);
    const Operator diag(s, rat_mat({{1, 0}, {0, -1}}));
    const RangeReport range = numerical_range(diag);
    REQUIRE(range.facets.size() == 4);
    CHECK(range.lo == -1);
    CHECK(range.hi == 1);
    CHECK(range.radius == 1);
    for (const FacetInterval& f : range.facets)
        CHECK(f.lo <= f.hi);

    // The hull endpoints are attained by some facet.
    bool lo_hit = false, hi_hit = false;
    for (const FacetInterval& f : range.facets) {
        lo_hit = lo_hit || f.lo == range.lo;
        hi_hit = hi_hit || f.hi == range.hi;
    }
    CHECK(lo_hit);
    CHECK(hi_hit);
}

TEST_CASE("range radius equals the pair-scan radius")
{
    std::mt19937_64 rng(31);
    for (const Space& s : {Space::cube(2), Space::octagon(),
                           Space::cross_polytope(3)}) {
        for (int trial = 0; trial < 10; ++trial) {
            const Operator t(s, random_op(rng, s.dim()));
            const RangeReport range = numerical_range(t);
            CHECK(range.radius == numerical_radius(t));
            CHECK(range.lo <= range.hi);
        }
    }
}

TEST_CASE("identity range degenerates to one")
{
    const RangeReport range = numerical_range(Operator::identity(Space::octagon()));
    CHECK(range.lo == 1);
    CHECK(range.hi == 1);
    CHECK(range.radius == 1);
}

TEST_CASE("operator storage and preconditions")
{
    const Space s = Space::cube(2);
    CHECK_THROWS_AS(Operator(s, RatMat(RatMat::Zero(3, 2))),
                    PreconditionError);
    CHECK_THROWS_AS(Operator(s, Eigen::MatrixXd(Eigen::MatrixXd::Zero(2, 3))),
                    PreconditionError);

    const Operator f(s, Eigen::MatrixXd(Eigen::MatrixXd::Identity(2, 2)));
    CHECK_FALSE(f.exact());
    CHECK_THROWS_AS(f.rational(), PreconditionError);
    CHECK_THROWS_AS(numerical_radius(f), PreconditionError);

    const Space two = Space::lp_space("two", 2, 2.0);
    const Operator lp_op(two, rat_mat({{1, 0}, {0, 1}}));
    CHECK(lp_op.entries_exact());
    CHECK_FALSE(lp_op.exact());
    CHECK_THROWS_AS(op_norm(lp_op), PreconditionError);

    const Operator g(s, rat_mat({{1, 2}, {3, 4}}));
    const RatVec image = g.apply(rat_vec({1, 1}));
    CHECK(image(0) == 3);
    CHECK(image(1) == 7);
}
