#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "numindex/errors.hpp"
#include "numindex/operators.hpp"
#include "numindex/sampling.hpp"

#include <random>

using namespace numindex;

TEST_CASE("euclidean radius of symmetric matrices is the spectral radius")
{
    const Space s = Space::lp_space("two", 2, 2.0);
    Eigen::MatrixXd t(2, 2);
    t << 2.0, 1.0, 1.0, 2.0;
    const SampleReport r = sample_radius(s, t);
    CHECK(r.value == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(sample_op_norm(s, t).value == doctest::Approx(3.0).epsilon(1e-9));

    Eigen::MatrixXd diag(2, 2);
    diag << 1.0, 0.0, 0.0, -1.0;
    CHECK(sample_radius(s, diag).value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("euclidean radius of a rotation vanishes")
{
    const Space s = Space::lp_space("two", 2, 2.0);
    Eigen::MatrixXd rot(2, 2);
    rot << 0.0, -1.0, 1.0, 0.0;
    const SampleReport r = sample_radius(s, rot);
    CHECK(r.value <= 1e-9);
    CHECK(sample_op_norm(s, rot).value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("sampled values agree with exact ones on polytopes")
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den(1, 4);

    for (const Space& s : {Space::cube(2), Space::octagon(),
                           Space::cross_polytope(3)}) {
        for (int trial = 0; trial < 10; ++trial) {
            RatMat m(s.dim(), s.dim());
            for (Eigen::Index i = 0; i < s.dim(); ++i)
                for (Eigen::Index j = 0; j < s.dim(); ++j)
                    m(i, j) = Rat(num(rng), den(rng));
            const Operator op(s, m);

            const double exact_w = to_double(numerical_radius(op));
            const double exact_n = to_double(op_norm(op));
            const double tol = 1e-6 * (1.0 + exact_n);
            CHECK(std::abs(sample_radius(s, op.floating()).value - exact_w) <=
                  tol);
            CHECK(std::abs(sample_op_norm(s, op.floating()).value - exact_n) <=
                  tol);
        }
    }
}

TEST_CASE("sum-norm sampling sees both signs of the free coordinates")
{
    // The support face at a basis vector leaves the other coordinates of
    // the functional free, so the best |f(Tx)| may need a negative fill.
    const Space s = Space::lp_space("one", 2, 1.0);
    Eigen::MatrixXd t(2, 2);
    t << -5.0, 0.0, 1.0, 0.0;
    // At x = e1: f = (sign fixed to +1, free): |f(Tx)| = |-5| + 1 = 6.
    const SampleReport r = sample_radius(s, t);
    CHECK(r.value == doctest::Approx(6.0).epsilon(1e-7));

    const Space cross = Space::cross_polytope(2);
    RatMat m(2, 2);
    m << Rat(-5), Rat(0), Rat(1), Rat(0);
    CHECK(numerical_radius(Operator(cross, m)) == 6);
}

TEST_CASE("value is monotone in mesh density")
{
    const Space s = Space::octagon();
    Eigen::MatrixXd t(2, 2);
    t << 0.3, -1.7, 0.9, 0.4;
    double prev = -1.0;
    for (int density = 0; density <= 3; ++density) {
        const double v = sample_radius(s, t, density).value;
        CHECK(v >= prev - 1e-12);
        prev = v;
    }
}

TEST_CASE("zero operator reports zero with a valid argmax")
{
    const Space s = Space::cube(2);
    const SampleReport r =
        sample_radius(s, Eigen::MatrixXd::Zero(2, 2));
    CHECK(r.value == 0.0);
    CHECK(r.argmax.size() == 2);
}

TEST_CASE("top points concentrate at the true maximizers")
{
    const Space s = Space::lp_space("two", 2, 2.0);
    Eigen::MatrixXd diag(2, 2);
    diag << 1.0, 0.0, 0.0, -1.0;
    const SampleReport r = sample_radius(s, diag, kDefaultDensity, true);
    REQUIRE(!r.top_points.empty());
    for (const Eigen::VectorXd& p : r.top_points) {
        const double to_axis =
            std::min(std::abs(std::abs(p(0)) - 1.0) + std::abs(p(1)),
                     std::abs(std::abs(p(1)) - 1.0) + std::abs(p(0)));
        CHECK(to_axis <= 1e-3);
    }
}

TEST_CASE("float ball gauge, projection and support functionals")
{
    const FloatBall ball(Space::octagon());
    CHECK(ball.gauge(Eigen::Vector2d(1.0, 1.0)) == doctest::Approx(1.5));
    const Eigen::VectorXd u = ball.to_sphere(Eigen::Vector2d(2.0, 2.0));
    CHECK(ball.gauge(u) == doctest::Approx(1.0));
    CHECK_THROWS_AS(ball.to_sphere(Eigen::Vector2d(0.0, 0.0)),
                    PreconditionError);

    const Eigen::VectorXd f =
        ball.support_functional(u, Eigen::Vector2d(1.0, 0.0));
    CHECK(f.dot(u) == doctest::Approx(1.0));

    const FloatBall l3(Space::lp_space("three", 2, 3.0));
    const Eigen::VectorXd x = l3.to_sphere(Eigen::Vector2d(1.0, 1.0));
    const Eigen::VectorXd g = l3.support_functional(x, x);
    CHECK(g.dot(x) == doctest::Approx(1.0));
}

TEST_CASE("mesh evaluation counts are reported")
{
    const Space s = Space::cube(2);
    Eigen::MatrixXd t(2, 2);
    t << 1.0, 0.0, 0.0, 1.0;
    const SampleReport r0 = sample_radius(s, t, 0);
    const SampleReport r2 = sample_radius(s, t, 2);
    CHECK(r0.evaluations >= 512);
    CHECK(r2.evaluations > r0.evaluations);
    CHECK(r0.density == 0);
    CHECK(r2.density == 2);
}

TEST_CASE("shape and density preconditions")
{
    const Space s = Space::cube(2);
    CHECK_THROWS_AS(sample_radius(s, Eigen::MatrixXd::Zero(3, 3)),
                    PreconditionError);
    CHECK_THROWS_AS(sample_radius(s, Eigen::MatrixXd::Zero(2, 2), -1),
                    PreconditionError);
    CHECK_THROWS_AS(sample_radius(s, Eigen::MatrixXd::Zero(2, 2), 9),
                    PreconditionError);
}
