#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "specdet/constants.hpp"
#include "specdet/determinant.hpp"
#include "specdet/identities.hpp"
#include "specdet/spectrum.hpp"

using namespace specdet;

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kJ = std::polar(1.0, 2.0 * kPi / 3.0);
const Complex kJ2 = std::polar(1.0, -2.0 * kPi / 3.0);

struct Sector {
  ParitySpectrum even, odd;
};

const Sector& solved(int degree) {
  static Sector cache[5];
  static bool done[5] = {};
  if (!done[degree]) {
    cache[degree].even =
        iterate_spectrum(degree, Parity::even, 320, 1e-10).first;
    cache[degree].odd = iterate_spectrum(degree, Parity::odd, 320, 1e-10).first;
    done[degree] = true;
  }
  return cache[degree];
}

}  // namespace

TEST_CASE("wronskian relation holds for N = 1, 3, 4") {
  for (int degree : {1, 3, 4}) {
    const Sector& s = solved(degree);
    const auto grid = default_grid(s.even);
    const IdentityReport r =
        wronskian_residual(degree, s.even, s.odd, grid);
    CHECK(r.passed);
    CHECK(r.max_rel_residual <= 1e-6);
    CHECK(r.identity_id == "wronskian");
  }
  const Sector& s2 = solved(2);
  CHECK_THROWS_AS(
      wronskian_residual(2, s2.even, s2.odd, std::vector<Complex>{}),
      std::domain_error);
}

TEST_CASE("wronskian residual is invariant under subscript shifts") {
  // rotating the whole grid by e^{i phi} must reproduce the same residual
  // set, since the report already scans every shift
  const Sector& s = solved(4);
  const double phi = dynamical_constants(4).phi;
  std::vector<Complex> grid{{0.5, 0.0}, {2.0, 1.0}};
  std::vector<Complex> rotated;
  for (const Complex& z : grid) rotated.push_back(std::polar(1.0, phi) * z);
  const IdentityReport a = wronskian_residual(4, s.even, s.odd, grid);
  const IdentityReport b = wronskian_residual(4, s.even, s.odd, rotated);
  CHECK(a.max_rel_residual == doctest::Approx(b.max_rel_residual)
                                  .epsilon(1e-10));
}

TEST_CASE("linear system determinant against an explicit 3x3 oracle") {
  const Sector& s = solved(4);
  const double phi = dynamical_constants(4).phi;
  const Complex ph = std::polar(1.0, phi / 4.0);
  for (Complex lam : {Complex(0.7, 0.0), Complex(1.2, 0.8)}) {
    Complex dp[3];
    for (int l = 0; l < 3; ++l) {
      dp[l] = det_value(s.even, s.odd, std::polar(1.0, l * phi) * lam).d_plus;
    }
    // rows: the shifted relations, unknowns (D0^-, D1^-, D2^-)
    const Complex m[3][3] = {
        {0.0, -dp[2] / ph, ph * dp[1]},
        {ph * dp[2], 0.0, -dp[0] / ph},
        {-dp[1] / ph, ph * dp[0], 0.0},
    };
    const Complex det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    const Complex closed = linear_system_determinant(4, s.even, s.odd, lam);
    CHECK(std::abs(det - closed) <= 1e-10 * std::abs(closed));
  }
}

TEST_CASE("linear system determinant degenerates at N = 1") {
  const Sector& s = solved(1);
  // sin(3 phi/4) = sin(pi) = 0: the system has a vanishing determinant
  const Complex d = linear_system_determinant(1, s.even, s.odd,
                                              Complex(1.0, 0.0));
  CHECK(std::abs(d) <= 1e-10);
  CHECK_THROWS_AS(
      linear_system_determinant(3, s.even, s.odd, Complex(1.0, 0.0)),
      std::domain_error);
}

TEST_CASE("linear system determinant value at 0 for N = 4") {
  const Sector& s = solved(4);
  const Complex d = linear_system_determinant(4, s.even, s.odd,
                                              Complex(0.0, 0.0));
  const double phi = dynamical_constants(4).phi;
  const Complex want = Complex(0.0, 2.0) * std::sin(0.75 * phi) *
                       std::exp(-3.0 * zeta_prime_zero(s.even));
  CHECK(std::abs(d - want) <= 1e-8 * std::abs(want));
}

TEST_CASE("quartic pairing expresses one parity through the other") {
  const Sector& s = solved(4);
  const IdentityReport r = pairing_residual(s.even, s.odd,
                                            default_grid(s.even));
  CHECK(r.passed);
  CHECK(r.max_rel_residual <= 1e-6);
  const Sector& s3 = solved(3);
  CHECK_THROWS_AS(pairing_residual(s3.even, s3.odd, std::vector<Complex>{}),
                  std::domain_error);
}

TEST_CASE("linear three-solution dependence, product and oracle sides") {
  const Sector& s = solved(1);
  const auto grid = default_grid(s.even);
  const IdentityReport product = dependence_residual(s.even, s.odd, grid);
  CHECK(product.passed);
  const IdentityReport oracle = dependence_residual_airy(grid);
  CHECK(oracle.passed);
  CHECK(oracle.max_abs_residual <= 1e-9);
  // the oracle side is far sharper than the spectral product side
  CHECK(oracle.max_abs_residual < product.max_abs_residual);
}

TEST_CASE("cocycle polynomial relations") {
  const Sector& s4 = solved(4);
  const IdentityReport c4 =
      cocycle_polynomial_residual(4, s4.even, s4.odd, default_grid(s4.even));
  CHECK(c4.passed);
  CHECK(c4.identity_id == "cocycle_cubic");

  const Sector& s1 = solved(1);
  const IdentityReport c1 =
      cocycle_polynomial_residual(1, s1.even, s1.odd, default_grid(s1.even));
  CHECK(c1.passed);
  CHECK(c1.identity_id == "cocycle_quadratic");

  const Sector& s3 = solved(3);
  CHECK_THROWS_AS(
      cocycle_polynomial_residual(3, s3.even, s3.odd, std::vector<Complex>{}),
      std::domain_error);
}

TEST_CASE("stokes functional equations via reports") {
  for (int degree : {1, 3, 4}) {
    const Sector& s = solved(degree);
    const IdentityReport r =
        stokes_equation_residual(degree, s.even, s.odd, default_grid(s.even));
    CHECK(r.passed);
  }
}

TEST_CASE("left-hand-side weights recur with period L") {
  for (int degree : {3, 4}) {
    const DynamicalConstants c = dynamical_constants(degree);
    for (int n = 0; n <= 2 * c.symmetry_order; ++n) {
      const double w_low = std::sin((n - 0.5) * c.phi / 2.0);
      const double w_high = std::sin((n + c.symmetry_order - 0.5) * c.phi / 2.0);
      CHECK(std::fabs(std::fabs(w_low) - std::fabs(w_high)) <= 1e-12);
    }
    // rank n = L combines both parities into the full zeta: the weights
    // are opposite there, so the left side reads  w (Z+(L) + Z-(L))
    const double wm = std::sin((c.symmetry_order - 0.5) * c.phi / 2.0);
    const double wp = std::sin((c.symmetry_order + 0.5) * c.phi / 2.0);
    CHECK(wm == doctest::Approx(-wp).epsilon(1e-12));
  }
}

TEST_CASE("zeta table reports missing entries") {
  ZetaTable t;
  CHECK_THROWS_WITH_AS(t.value(Parity::even, 2),
                       doctest::Contains("missing"), std::runtime_error);
  CHECK_THROWS_WITH_AS(t.prime(Parity::odd), doctest::Contains("missing"),
                       std::runtime_error);
}

TEST_CASE("sum rules pass for every reference degree") {
  for (int degree : {1, 2, 3, 4}) {
    const Sector& s = solved(degree);
    const ZetaTable t = make_zeta_table(s.even, s.odd, 3);
    const auto reports = sum_rule_report(degree, t);
    CHECK(!reports.empty());
    for (const IdentityReport& r : reports) {
      INFO(r.identity_id);
      CHECK(r.passed);
      CHECK(r.max_rel_residual <= 1e-6);
    }
  }
}
