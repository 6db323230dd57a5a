#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "specdet/errors.hpp"
#include "specdet/special.hpp"

using namespace specdet;

namespace {
constexpr double kPi = 3.14159265358979323846;
const Complex kJ = std::polar(1.0, 2.0 * kPi / 3.0);
const Complex kJ2 = std::polar(1.0, -2.0 * kPi / 3.0);
}  // namespace

TEST_CASE("real gamma anchors") {
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(log_gamma(10.5) ==
        doctest::Approx(std::log(gamma_fn(10.5))).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
}

TEST_CASE("complex gamma: recurrence and reflection") {
  const Complex z(0.3, 0.4);
  const Complex lhs = gamma_fn(z + 1.0);
  const Complex rhs = z * gamma_fn(z);
  CHECK(std::abs(lhs - rhs) <= 1e-14 * std::abs(lhs));
  const Complex refl = gamma_fn(z) * gamma_fn(1.0 - z);
  const Complex expect = kPi / std::sin(kPi * z);
  CHECK(std::abs(refl - expect) <= 1e-13 * std::abs(expect));
  CHECK(std::abs(gamma_fn(Complex(0.5, 0.0)) - Complex(std::sqrt(kPi), 0.0)) <=
        1e-13);
}

TEST_CASE("hurwitz zeta anchors") {
  // reference digits from a 30-digit independent evaluation
  CHECK(hurwitz_zeta(2.0, 0.25) ==
        doctest::Approx(17.1973291545071107).epsilon(1e-13));
  CHECK(hurwitz_zeta(-1.0, 0.3) ==
        doctest::Approx(0.0216666666666666667).epsilon(1e-12));
  CHECK(hurwitz_zeta(-2.5, 1.7) ==
        doctest::Approx(-0.405961101941082177).epsilon(1e-12));
  CHECK(hurwitz_zeta(0.5, 0.25) ==
        doctest::Approx(0.239963524495630955).epsilon(1e-12));
  // zeta(0, a) = 1/2 - a
  for (double a : {0.25, 0.75, 1.0, 3.5}) {
    CHECK(hurwitz_zeta(0.0, a) == doctest::Approx(0.5 - a).epsilon(1e-13));
  }
  // plain convergent sum cross-check at s = 3
  double direct = 0.0;
  for (int n = 4000; n >= 0; --n) direct += std::pow(n + 0.7, -3.0);
  direct += 0.5 * std::pow(4000.7, -2.0);  // Euler-Maclaurin closure
  CHECK(hurwitz_zeta(3.0, 0.7) == doctest::Approx(direct).epsilon(1e-9));
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 0.5), NumericalError);
}

TEST_CASE("hurwitz zeta derivative at 0") {
  CHECK(hurwitz_zeta_deriv0(1.0) ==
        doctest::Approx(-0.5 * std::log(2.0 * kPi)).epsilon(1e-13));
  CHECK(hurwitz_zeta_deriv0(0.25) ==
        doctest::Approx(log_gamma(0.25) - 0.5 * std::log(2.0 * kPi))
            .epsilon(1e-13));
}

TEST_CASE("airy values match reference digits") {
  // reference digits from a 30-digit independent evaluation
  struct Ref {
    Complex z, ai, aip;
    double tol;
  };
  const Ref refs[] = {
      {{0.0, 0.0}, {0.35502805388781724, 0.0}, {-0.25881940379280680, 0.0},
       1e-14},
      {{1.0, 0.0}, {0.13529241631288142, 0.0}, {-0.15914744129679321, 0.0},
       1e-13},
      {{-2.5, 0.0}, {-0.11232506769296609, 0.0}, {0.67885273426479436, 0.0},
       1e-12},
      {{7.0, 0.0}, {7.4921288639971671e-7, 0.0}, {-2.0081508947387920e-6, 0.0},
       1e-11},
      {{0.0, 5.5},
       {79.635230208408770, -14.802020119556118},
       {-156.05796394312871, -103.74621568066832},
       1e-11},
  };
  for (const Ref& r : refs) {
    const AiryValue a = airy(r.z);
    CHECK(std::abs(a.ai - r.ai) <= r.tol * std::abs(r.ai));
    CHECK(std::abs(a.ai_prime - r.aip) <= r.tol * std::abs(r.aip));
  }
  // connection-formula region near the negative axis
  const AiryValue b = airy(Complex(-8.0, 3.0));
  const Complex want(432.41765262103240, 720.73967698022607);
  CHECK(std::abs(b.ai - want) <= 1e-10 * std::abs(want));
}

TEST_CASE("airy method dispatch") {
  CHECK(airy(Complex(2.0, 1.0)).method == AiryMethod::series);
  CHECK(airy(Complex(9.0, 0.0)).method == AiryMethod::asymptotic);
  CHECK_THROWS_AS(airy(Complex(45.0, 0.0)), NumericalError);
}

TEST_CASE("airy three-solution dependence on a grid") {
  for (int i = 0; i < 100; ++i) {
    const Complex z = std::polar(5.0 * ((i % 10) + 1) / 10.0,
                                 2.0 * kPi * (i / 10) / 10.0);
    const Complex r = airy(z).ai + kJ * airy(kJ * z).ai +
                      kJ2 * airy(kJ2 * z).ai;
    CHECK(std::abs(r) <= 1e-9);
  }
}

TEST_CASE("airy wronskian constant across method regions") {
  // W[Ai(.), Ai(j^2 .)] = e^{i pi/6} / (2 pi)
  const Complex want = std::polar(1.0 / (2.0 * kPi), kPi / 6.0);
  for (double r : {0.5, 3.0, 5.5, 6.5, 8.0}) {
    for (double th : {0.0, 1.1, 2.5, -2.0}) {
      const Complex z = std::polar(r, th);
      const AiryValue a = airy(z);
      const AiryValue b = airy(kJ2 * z);
      const Complex w = a.ai * kJ2 * b.ai_prime - a.ai_prime * b.ai;
      // the two products grow like exp(2|zeta|) before cancelling to a
      // constant, so the achievable absolute accuracy scales with their size
      const double scale =
          std::abs(a.ai) * std::abs(b.ai_prime) + std::abs(a.ai_prime) * std::abs(b.ai);
      CHECK(std::abs(w - want) <= std::max(1e-9, 1e-14 * scale));
    }
  }
}

TEST_CASE("airy zeros match reference digits") {
  // reference digits from a 30-digit independent evaluation
  CHECK(airy_zero(AiryKind::Ai, 1) ==
        doctest::Approx(2.33810741045976704).epsilon(1e-11));
  CHECK(airy_zero(AiryKind::Ai, 2) ==
        doctest::Approx(4.08794944413097062).epsilon(1e-11));
  CHECK(airy_zero(AiryKind::Ai, 5) ==
        doctest::Approx(7.94413358712085312).epsilon(1e-11));
  CHECK(airy_zero(AiryKind::AiPrime, 1) ==
        doctest::Approx(1.01879297164747109).epsilon(1e-11));
  CHECK(airy_zero(AiryKind::AiPrime, 3) ==
        doctest::Approx(4.82009921117873564).epsilon(1e-11));
  CHECK_THROWS_AS(airy_zero(AiryKind::Ai, 0), std::domain_error);
}

TEST_CASE("airy zeros approach the semiclassical estimate") {
  // a_s ~ (3 pi (4s - 1) / 8)^{2/3} for large s
  const int s = 40;
  const double est = std::pow(3.0 * kPi * (4.0 * s - 1.0) / 8.0, 2.0 / 3.0);
  CHECK(airy_zero(AiryKind::Ai, s) == doctest::Approx(est).epsilon(1e-4));
}
