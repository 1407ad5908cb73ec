#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "numindex/attainment.hpp"
#include "numindex/errors.hpp"

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

TEST_CASE("attainment entries are normalized witnesses")
{
    const Space s = Space::cube(2);
    const Operator id = Operator::identity(s);
    const AttainmentSet set = attainment_set(id);
    CHECK(set.radius == 1);
    CHECK(set.entries.size() == 8);
    for (const AttainmentEntry& e : set.entries) {
        CHECK(e.functional.dot(e.point) == 1);
        const Rat value = e.functional.dot(id.rational() * e.point);
        CHECK(value == Rat(e.sign) * set.radius);
    }
}

TEST_CASE("attainment concentrates on the active pair")
{
    const Space s = Space::cube(2);
    const Operator t(s, rat_mat({{1, Rat(1, 2)}, {0, 0}}));
    const AttainmentSet set = attainment_set(t);
    CHECK(set.radius == Rat(3, 2));
    REQUIRE(set.entries.size() == 2);
    // The two entries are the antipodal twins of one witness.
    CHECK(lex_compare(set.entries[0].point,
                      RatVec(-set.entries[1].point)) == 0);
    CHECK(lex_compare(set.entries[0].functional,
                      RatVec(-set.entries[1].functional)) == 0);
    CHECK(nu_smooth(t));
}

TEST_CASE("identity is not nu-smooth on the max-norm plane")
{
    CHECK_FALSE(nu_smooth(Operator::identity(Space::cube(2))));
}

TEST_CASE("zero radius has no attainment signs")
{
    CHECK_THROWS_AS(attainment_set(Operator::zero(Space::cube(2))),
                    ZeroRadius);
}

TEST_CASE("orthogonality to a shear direction")
{
    const Space s = Space::cube(2);
    const Operator id = Operator::identity(s);
    const std::vector<RatMat> w = {rat_mat({{0, 1}, {0, 0}})};
    const BjReport report = bj_orthogonal_w(id, w);
    REQUIRE(report.orthogonal);
    CHECK(report.radius_before == 1);

    // The returned weights are a convex combination cancelling the
    // perturbation values.
    const AttainmentSet set = attainment_set(id);
    Rat total(0);
    Rat combo(0);
    for (const auto& [idx, weight] : report.coefficients) {
        CHECK(weight > 0);
        total += weight;
        const AttainmentEntry& e = set.entries[idx];
        combo += weight * Rat(e.sign) *
                 e.functional.dot(w[0] * e.point);
    }
    CHECK(total == 1);
    CHECK(combo == 0);
}

TEST_CASE("non-orthogonality yields a certified descent step")
{
    const Space s = Space::cube(2);
    const Operator id = Operator::identity(s);
    const std::vector<RatMat> w = {rat_mat({{1, 0}, {0, 1}})};
    const BjReport report = bj_orthogonal_w(id, w);
    REQUIRE_FALSE(report.orthogonal);
    CHECK(report.radius_after < report.radius_before);
    CHECK(report.step > 0);

    RatMat moved = id.rational();
    for (Eigen::Index j = 0; j < report.direction.size(); ++j)
        moved += report.step * report.direction(j) * w[static_cast<std::size_t>(j)];
    CHECK(numerical_radius(Operator(s, moved)) == report.radius_after);
}

TEST_CASE("orthogonality verdicts are sound on random instances")
{
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> lam_num(-2000, 2000);
    const Space s = Space::octagon();

    for (int trial = 0; trial < 12; ++trial) {
        const RatMat t_m = random_op(rng, 2);
        const Operator t(s, t_m);
        if (numerical_radius(t) == 0)
            continue;
        const std::vector<RatMat> w = {random_op(rng, 2)};
        const BjReport report = bj_orthogonal_w(t, w);
        if (report.orthogonal) {
            // No sampled multiple of the perturbation may dip.
            for (int k = 0; k < 64; ++k) {
                const Rat lam(lam_num(rng), 1000);
                const RatMat moved = t_m + lam * w[0];
                CHECK(numerical_radius(Operator(s, moved)) >=
                      report.radius_before);
            }
        } else {
            RatMat moved = t_m;
            moved += report.step * report.direction(0) * w[0];
            CHECK(numerical_radius(Operator(s, moved)) ==
                  report.radius_after);
            CHECK(report.radius_after < report.radius_before);
        }
    }

    // Deterministic instances pin both branches: the identity is never
    // orthogonal to itself (lambda = -1 kills the radius), and it is
    // orthogonal to a quarter turn, whose attainment values straddle zero
    // by symmetry.
    const Operator id(s, rat_mat({{1, 0}, {0, 1}}));
    CHECK_FALSE(bj_orthogonal_w(id, {rat_mat({{1, 0}, {0, 1}})}).orthogonal);
    CHECK(bj_orthogonal_w(id, {rat_mat({{0, 1}, {-1, 0}})}).orthogonal);
}

TEST_CASE("orthogonality is homogeneous in the perturbation")
{
    const Space s = Space::cube(2);
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 8; ++trial) {
        const Operator t(s, random_op(rng, 2));
        if (numerical_radius(t) == 0)
            continue;
        const RatMat a = random_op(rng, 2);
        const std::vector<RatMat> w1 = {a};
        const std::vector<RatMat> w2 = {RatMat(Rat(7, 3) * a)};
        CHECK(bj_orthogonal_w(t, w1).orthogonal ==
              bj_orthogonal_w(t, w2).orthogonal);
    }
}

TEST_CASE("multiple perturbations use few witness weights")
{
    const Space s = Space::octagon();
    const Operator id = Operator::identity(s);
    const std::vector<RatMat> w = {rat_mat({{0, 1}, {0, 0}}),
                                   rat_mat({{0, 0}, {1, 0}})};
    const BjReport report = bj_orthogonal_w(id, w);
    if (report.orthogonal)
        CHECK(report.coefficients.size() <= 3);
    CHECK_THROWS_AS(bj_orthogonal_w(id, {}), PreconditionError);
    CHECK_THROWS_AS(bj_orthogonal_w(id, {RatMat(RatMat::Zero(3, 3))}),
                    PreconditionError);
}

TEST_CASE("rank-one operators have radius and norm one")
{
    const Space s = Space::cube(2);
    const Operator t = rank_one_spear(s, rat_vec({1, 1}), rat_vec({1, 0}), 1);
    const RatMat expected = rat_mat({{1, 0}, {1, 0}});
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j)
            CHECK(t.rational()(i, j) == expected(i, j));
    CHECK(numerical_radius(t) == 1);
    CHECK(op_norm(t) == 1);

    const Operator neg =
        rank_one_spear(s, rat_vec({1, 1}), rat_vec({-1, 0}), -1);
    CHECK(numerical_radius(neg) == 1);

    CHECK_THROWS_AS(rank_one_spear(s, rat_vec({2, 0}), rat_vec({1, 0}), 1),
                    PreconditionError);
    CHECK_THROWS_AS(rank_one_spear(s, rat_vec({1, 1}), rat_vec({2, 0}), 1),
                    PreconditionError);
    CHECK_THROWS_AS(rank_one_spear(s, rat_vec({1, 1}), rat_vec({0, 1}), -1),
                    PreconditionError);
}

TEST_CASE("rank-one construction for smooth exponents")
{
    const Space s = Space::lp_space("three", 2, 3.0);
    const double a = std::pow(2.0, -1.0 / 3.0);
    const Eigen::VectorXd x = Eigen::Vector2d(a, a);
    const Eigen::VectorXd f = Eigen::Vector2d(a * a, a * a);
    const Operator t = rank_one_spear(s, x, f, 1);
    CHECK_FALSE(t.exact());
    CHECK_THROWS_AS(rank_one_spear(s, Eigen::VectorXd(2 * x), f, 1),
                    PreconditionError);
}

TEST_CASE("every admissible tensor of the octagon is exposed")
{
    const Space s = Space::octagon();
    for (const TensorFunctional& tf : build_M(s))
        CHECK(exposed_point_check(s, tf));

    const TensorFunctional alien =
        TensorFunctional::from_pair(rat_vec({1, 1}), rat_vec({1, 1}));
    CHECK_THROWS_AS(exposed_point_check(s, alien), PreconditionError);
}
