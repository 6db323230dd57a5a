#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "specdet/constants.hpp"

using namespace specdet;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("constants for the four reference degrees") {
  // reference digits from a 25-digit independent evaluation
  const DynamicalConstants c1 = dynamical_constants(1);
  CHECK(c1.mu == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(c1.phi == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-15));
  CHECK(c1.symmetry_order == 3);
  CHECK(c1.b0 == doctest::Approx(8.0 / 3.0).epsilon(1e-13));
  REQUIRE(c1.a0.has_value());
  CHECK(*c1.a0 == doctest::Approx(-4.0 / 3.0).epsilon(1e-13));
  CHECK(c1.kappa == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));

  const DynamicalConstants c2 = dynamical_constants(2);
  CHECK(c2.mu == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(c2.symmetry_order == 2);
  CHECK(c2.b0 == doctest::Approx(kPi).epsilon(1e-13));
  CHECK_FALSE(c2.a0.has_value());
  CHECK(c2.kappa == doctest::Approx(0.0).epsilon(1e-15));

  const DynamicalConstants c3 = dynamical_constants(3);
  CHECK(c3.mu == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  CHECK(c3.symmetry_order == 5);
  CHECK(c3.b0 == doctest::Approx(3.36523705278109023).epsilon(1e-13));
  REQUIRE(c3.a0.has_value());
  CHECK(*c3.a0 == doctest::Approx(3.36523705278109023).epsilon(1e-13));
  CHECK(c3.kappa == doctest::Approx(0.2).epsilon(1e-15));

  const DynamicalConstants c4 = dynamical_constants(4);
  CHECK(c4.mu == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(c4.phi == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-15));
  CHECK(c4.symmetry_order == 3);
  CHECK(c4.b0 == doctest::Approx(3.49607673905615975).epsilon(1e-13));
  REQUIRE(c4.a0.has_value());
  CHECK(*c4.a0 == doctest::Approx(2.47209956973516256).epsilon(1e-13));
  // b0 = sqrt(2/pi)/3 Gamma(1/4)^2 and a0 = b0/sqrt(2), alternative forms
  CHECK(*c4.a0 == doctest::Approx(c4.b0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(c4.kappa == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  const DynamicalConstants c6 = dynamical_constants(6);
  CHECK(c6.symmetry_order == 4);
  CHECK(c6.b0 == doctest::Approx(3.64297597183137242).epsilon(1e-13));
}

TEST_CASE("total rotation angle L phi") {
  for (int n = 1; n <= 12; ++n) {
    const DynamicalConstants c = dynamical_constants(n);
    const double total = c.symmetry_order * c.phi;
    const double want = (n % 2 == 0) ? 2.0 * kPi : 4.0 * kPi;
    CHECK(total == doctest::Approx(want).epsilon(1e-14));
  }
}

TEST_CASE("degree validation") {
  CHECK_THROWS_AS(dynamical_constants(0), std::domain_error);
  CHECK_THROWS_AS(dynamical_constants(-3), std::domain_error);
}

TEST_CASE("duality pairing N N' = 4") {
  const DualityReport d1 = duality_check(1);
  REQUIRE(d1.has_dual);
  CHECK(d1.dual_degree == 4);
  CHECK(d1.all_ok());

  const DualityReport d4 = duality_check(4);
  REQUIRE(d4.has_dual);
  CHECK(d4.dual_degree == 1);
  CHECK(d4.all_ok());

  const DualityReport d2 = duality_check(2);
  REQUIRE(d2.has_dual);
  CHECK(d2.dual_degree == 2);  // selfdual
  CHECK(d2.all_ok());

  for (int n : {3, 5, 6, 7}) {
    CHECK_FALSE(duality_check(n).has_dual);
  }
}
