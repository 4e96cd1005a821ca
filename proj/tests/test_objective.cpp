#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "psolab/objective.hpp"

using namespace psolab::objective;

TEST_CASE("Point validates its coordinates")
{
    CHECK_THROWS_AS(Point(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(Point({1.0, std::numeric_limits<double>::quiet_NaN()}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Point({std::numeric_limits<double>::infinity()}),
                    std::invalid_argument);

    const Point p{1.5, -2.0};
    CHECK(p.dim() == 2);
    CHECK(p[0] == 1.5);
    CHECK(p[1] == -2.0);
    CHECK(p == Point({1.5, -2.0}));
    CHECK_FALSE(p == Point({1.5, -2.1}));
}

TEST_CASE("schaffer_f6 known values")
{
    // Exact zero at the origin: sin^2(0) - 0.5 cancels the 0.5 offset.
    CHECK(schaffer_f6(Point{0.0, 0.0}) == 0.0);

    // Frozen high-precision evaluations of the closed form.
    CHECK(schaffer_f6(Point{3.0, 4.0}) ==
          doctest::Approx(0.8993201804052123).epsilon(1e-12));
    CHECK(schaffer_f6(Point{1.0, 1.0}) ==
          doctest::Approx(0.9737845308015941).epsilon(1e-12));
}

TEST_CASE("schaffer_f6 is radial and stays inside [0, 1)")
{
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> coord(-100.0, 100.0);
    for (int i = 0; i < 2000; ++i) {
        const double x = coord(gen);
        const double y = coord(gen);
        const double f = schaffer_f6(Point{x, y});
        CHECK(f >= 0.0);
        CHECK(f < 1.0);
        // x^2 + y^2 is commutative bit-for-bit, so these hold exactly.
        CHECK(f == schaffer_f6(Point{y, x}));
        CHECK(f == schaffer_f6(Point{-x, -y}));
        // Same radius along the axis: the only rounding is sqrt then square.
        const double r = std::sqrt(x * x + y * y);
        CHECK(schaffer_f6(Point{r, 0.0}) == doctest::Approx(f).epsilon(1e-9));
    }
}

TEST_CASE("schaffer_f6 requires dimension 2")
{
    CHECK_THROWS_AS(schaffer_f6(Point{1.0}), std::invalid_argument);
    CHECK_THROWS_AS(schaffer_f6(Point{1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("sphere sums squared coordinates in any dimension")
{
    CHECK(sphere(Point{3.0, 4.0}) == 25.0);
    CHECK(sphere(Point{-2.0}) == 4.0);
    CHECK(sphere(Point{1.0, 1.0, 1.0, 1.0}) == 4.0);
}

TEST_CASE("objective registry")
{
    const Objective* schaffer = find_objective("schaffer_f6");
    REQUIRE(schaffer != nullptr);
    CHECK(schaffer->required_dimension == 2);
    CHECK(schaffer->fn(Point{0.0, 0.0}) == 0.0);

    const Objective* sph = find_objective("sphere");
    REQUIRE(sph != nullptr);
    CHECK(sph->required_dimension == 0);

    CHECK(find_objective("rastrigin") == nullptr);
    CHECK(all_objectives().size() == 2);
}

TEST_CASE("BudgetedEvaluator counts and cuts off")
{
    BudgetedEvaluator ev(sphere, 3);
    CHECK(ev.budget() == 3);
    CHECK(ev.remaining() == 3);
    CHECK_FALSE(ev.exhausted());

    const Point p{1.0, 2.0};
    CHECK(ev.evaluate(p) == 5.0);
    CHECK(ev.evaluate(p) == 5.0);
    CHECK(ev.remaining() == 1);
    CHECK(ev.evaluate(p) == 5.0);
    CHECK(ev.used() == 3);
    CHECK(ev.exhausted());

    CHECK_FALSE(ev.evaluate(p).has_value());
    CHECK(ev.used() == 3); // a refused evaluation consumes nothing
}

TEST_CASE("BudgetedEvaluator does not charge for a throwing objective")
{
    BudgetedEvaluator ev(schaffer_f6, 5);
    CHECK_THROWS_AS(ev.evaluate(Point{1.0}), std::invalid_argument);
    CHECK(ev.used() == 0);
    CHECK(ev.evaluate(Point{0.0, 0.0}) == 0.0);
    CHECK(ev.used() == 1);
}
