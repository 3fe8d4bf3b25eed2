#include <cmath>

#include "doctest.h"
#include "tensorwalk/errors.hpp"
#include "tensorwalk/scalar_function.hpp"

using namespace tensorwalk;

TEST_CASE("built-in evaluation") {
  CHECK(ScalarFunctionSpec::identity()(3.5) == 3.5);
  CHECK(ScalarFunctionSpec::affine(2.0, -1.0)(4.0) == 7.0);
  CHECK(ScalarFunctionSpec::power(2.0)(3.0) == doctest::Approx(9.0));
  CHECK(ScalarFunctionSpec::power(0.5)(4.0) == doctest::Approx(2.0));
  CHECK(ScalarFunctionSpec::exponential(std::exp(1.0))(1.0) ==
        doctest::Approx(std::exp(1.0)));
  CHECK(ScalarFunctionSpec::negative_log()(1.0) == doctest::Approx(0.0));
  CHECK(ScalarFunctionSpec::polynomial({1.0, 0.0, 2.0})(3.0) ==
        doctest::Approx(19.0));
}

TEST_CASE("domain violations raise") {
  CHECK_THROWS_AS(ScalarFunctionSpec::negative_log()(0.0), DomainError);
  CHECK_THROWS_AS(ScalarFunctionSpec::negative_log()(-1.0), DomainError);
  CHECK_THROWS_AS(ScalarFunctionSpec::power(0.5)(-0.1), DomainError);
}

TEST_CASE("derivatives match finite differences") {
  const double h = 1e-6;
  for (const auto& f :
       {ScalarFunctionSpec::power(2.0), ScalarFunctionSpec::power(3.0),
        ScalarFunctionSpec::exponential(2.0), ScalarFunctionSpec::negative_log(),
        ScalarFunctionSpec::polynomial({0.5, -1.0, 0.0, 2.0})}) {
    for (double s : {0.7, 1.3, 2.2}) {
      const double fd = (f(s + h) - f(s - h)) / (2.0 * h);
      CHECK(f.derivative(s) == doctest::Approx(fd).epsilon(1e-4));
    }
  }
}

TEST_CASE("convexity grid test") {
  CHECK(ScalarFunctionSpec::power(2.0).convex_on(0.0, 2.0));
  CHECK(ScalarFunctionSpec::exponential(std::exp(1.0)).convex_on(-1.0, 1.0));
  CHECK(ScalarFunctionSpec::negative_log().convex_on(0.5, 2.0));
  CHECK(ScalarFunctionSpec::identity().convex_on(-5.0, 5.0));
  // sqrt is concave, and so is the flipped parabola.
  CHECK_FALSE(ScalarFunctionSpec::power(0.5).convex_on(0.5, 2.0));
  CHECK_FALSE(ScalarFunctionSpec::polynomial({0.0, 0.0, -1.0}).convex_on(0.0, 1.0));
}

TEST_CASE("inverse derivative closed forms") {
  const auto sq = ScalarFunctionSpec::power(2.0);
  auto s0 = sq.inverse_derivative(2.0, 0.0, 2.0);
  REQUIRE(s0.has_value());
  CHECK(*s0 == doctest::Approx(1.0));

  const auto ex = ScalarFunctionSpec::exponential(std::exp(1.0));
  const double m = std::exp(1.0) - 1.0;
  s0 = ex.inverse_derivative(m, 0.0, 1.0);
  REQUIRE(s0.has_value());
  CHECK(*s0 == doctest::Approx(std::log(m)));

  const auto nl = ScalarFunctionSpec::negative_log();
  s0 = nl.inverse_derivative(-0.5, 0.5, 4.0);
  REQUIRE(s0.has_value());
  CHECK(*s0 == doctest::Approx(2.0));

  // Polynomial path uses bisection.
  const auto poly = ScalarFunctionSpec::polynomial({0.0, 0.0, 1.0});  // s^2
  s0 = poly.inverse_derivative(2.0, 0.0, 2.0);
  REQUIRE(s0.has_value());
  CHECK(*s0 == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("registry lookup") {
  CHECK(ScalarFunctionSpec::from_name("square")(3.0) == doctest::Approx(9.0));
  CHECK(ScalarFunctionSpec::from_name("sqrt")(9.0) == doctest::Approx(3.0));
  CHECK(ScalarFunctionSpec::from_name("exp")(0.0) == doctest::Approx(1.0));
  CHECK(ScalarFunctionSpec::from_name("cube")(2.0) == doctest::Approx(8.0));
  CHECK(ScalarFunctionSpec::from_name("affine", {3.0, 1.0})(2.0) == 7.0);
  CHECK_THROWS_AS(ScalarFunctionSpec::from_name("sinh"), ConfigError);
  CHECK_THROWS_AS(ScalarFunctionSpec::from_name("affine", {1.0}), ConfigError);
}
