#include "specdet/identities.hpp"

#include <cmath>
#include <stdexcept>

#include "specdet/errors.hpp"
#include "specdet/special.hpp"

namespace specdet {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kJ = std::polar(1.0, 2.0 * kPi / 3.0);   // j = e^{2 pi i/3}
const Complex kJ2 = std::polar(1.0, -2.0 * kPi / 3.0);  // j^2

struct ResidualAccumulator {
  IdentityReport report;
  void add(Complex point, double abs_residual, double scale) {
    report.sample_points.push_back(point);
    report.max_abs_residual = std::max(report.max_abs_residual, abs_residual);
    report.max_rel_residual = std::max(
        report.max_rel_residual, abs_residual / std::max(scale, 1e-30));
  }
  IdentityReport finish() {
    report.passed = report.max_rel_residual <= report.threshold;
    return report;
  }
};

ResidualAccumulator make_acc(std::string id, int degree, double threshold) {
  ResidualAccumulator acc;
  acc.report.identity_id = std::move(id);
  acc.report.degree = degree;
  acc.report.threshold = threshold;
  return acc;
}

Complex rotated_full(const ParitySpectrum& e, const ParitySpectrum& o,
                     double phi, int ell, Complex lambda) {
  return det_value(e, o, std::polar(1.0, ell * phi) * lambda).d_full;
}

}  // namespace

std::vector<Complex> default_grid(const ParitySpectrum& spec_even) {
  std::vector<Complex> grid;
  const double lam4 = spec_even.level(4);
  for (int i = 0; i < 24; ++i) grid.emplace_back(lam4 * i / 23.0, 0.0);
  for (int m = 0; m < 8; ++m) {
    grid.push_back(std::polar(1.0, kPi * (2 * m + 1) / 8.0));
  }
  return grid;
}

IdentityReport wronskian_residual(int degree, const ParitySpectrum& spec_even,
                                  const ParitySpectrum& spec_odd,
                                  const std::vector<Complex>& grid,
                                  double threshold) {
  if (degree == 2) throw std::domain_error("wronskian_residual: N != 2");
  const DynamicalConstants c = dynamical_constants(degree);
  const Complex ph = std::polar(1.0, c.phi / 4.0);
  auto acc = make_acc("wronskian", degree, threshold);
  for (const Complex& lam : grid) {
    for (int ell = 0; ell < c.symmetry_order; ++ell) {
      const Complex l0 = std::polar(1.0, ell * c.phi) * lam;
      const Complex l1 = std::polar(1.0, c.phi) * l0;
      const DeterminantValue d0 = det_value(spec_even, spec_odd, l0);
      const DeterminantValue d1 = det_value(spec_even, spec_odd, l1);
      const Complex lhs = ph * d0.d_plus * d1.d_minus -
                          d1.d_plus * d0.d_minus / ph;
      const double scale = std::max(
          2.0, std::abs(d0.d_plus * d1.d_minus) +
                   std::abs(d1.d_plus * d0.d_minus));
      acc.add(lam, std::abs(lhs - Complex(0.0, 2.0)), scale);
    }
  }
  return acc.finish();
}

Complex linear_system_determinant(int degree, const ParitySpectrum& spec_even,
                                  const ParitySpectrum& spec_odd,
                                  Complex lambda) {
  const DynamicalConstants c = dynamical_constants(degree);
  if (c.symmetry_order != 3) {
    throw std::domain_error("linear_system_determinant: requires L = 3");
  }
  Complex prod = 1.0;
  for (int ell = 0; ell < 3; ++ell) {
    prod *= det_value(spec_even, spec_odd,
                      std::polar(1.0, ell * c.phi) * lambda)
                .d_plus;
  }
  return Complex(0.0, 2.0) * std::sin(0.75 * c.phi) * prod;
}

IdentityReport pairing_residual(const ParitySpectrum& spec_even,
                                const ParitySpectrum& spec_odd,
                                const std::vector<Complex>& grid,
                                double threshold) {
  if (spec_even.degree != 4) {
    throw std::domain_error("pairing_residual: N = 4 only");
  }
  const double phi = dynamical_constants(4).phi;
  auto acc = make_acc("pairing", 4, threshold);
  for (const Complex& lam : grid) {
    DeterminantValue d[3];
    for (int ell = 0; ell < 3; ++ell) {
      d[ell] = det_value(spec_even, spec_odd, std::polar(1.0, ell * phi) * lam);
    }
    const Complex denp = d[1].d_plus * d[2].d_plus;
    const Complex denm = d[1].d_minus * d[2].d_minus;
    if (std::abs(denp) < 1e-12 || std::abs(denm) < 1e-12) continue;  // guard
    const Complex r1 =
        d[0].d_minus - (d[0].d_plus - kJ2 * d[1].d_plus - kJ * d[2].d_plus) /
                           denp;
    const Complex r2 =
        d[0].d_plus - (d[0].d_minus - kJ * d[1].d_minus - kJ2 * d[2].d_minus) /
                          denm;
    const double scale =
        std::max({1.0, std::abs(d[0].d_minus), std::abs(d[0].d_plus)});
    acc.add(lam, std::max(std::abs(r1), std::abs(r2)), scale);
  }
  return acc.finish();
}

IdentityReport dependence_residual(const ParitySpectrum& spec_even,
                                   const ParitySpectrum& spec_odd,
                                   const std::vector<Complex>& grid,
                                   double threshold) {
  if (spec_even.degree != 1) {
    throw std::domain_error("dependence_residual: N = 1 only");
  }
  const double phi = dynamical_constants(1).phi;
  auto acc = make_acc("dependence_product", 1, threshold);
  for (const Complex& lam : grid) {
    DeterminantValue d[3];
    for (int ell = 0; ell < 3; ++ell) {
      d[ell] = det_value(spec_even, spec_odd, std::polar(1.0, ell * phi) * lam);
    }
    const Complex rm = d[0].d_minus + kJ2 * d[1].d_minus + kJ * d[2].d_minus;
    const Complex rp = d[0].d_plus + kJ * d[1].d_plus + kJ2 * d[2].d_plus;
    double scale = 1.0;
    for (int ell = 0; ell < 3; ++ell) {
      scale = std::max({scale, std::abs(d[ell].d_minus),
                        std::abs(d[ell].d_plus)});
    }
    acc.add(lam, std::max(std::abs(rm), std::abs(rp)), scale);
  }
  return acc.finish();
}

IdentityReport dependence_residual_airy(const std::vector<Complex>& grid,
                                        double threshold) {
  auto acc = make_acc("dependence_airy", 1, threshold);
  for (const Complex& z : grid) {
    const AiryValue a0 = airy(z);
    const AiryValue a1 = airy(kJ * z);
    const AiryValue a2 = airy(kJ2 * z);
    const Complex r = a0.ai + kJ * a1.ai + kJ2 * a2.ai;
    const Complex rp = a0.ai_prime + kJ2 * a1.ai_prime + kJ * a2.ai_prime;
    const double scale = std::max(
        {1.0, std::abs(a0.ai), std::abs(a1.ai), std::abs(a2.ai)});
    acc.add(z, std::max(std::abs(r), std::abs(rp)), scale);
  }
  return acc.finish();
}

IdentityReport cocycle_polynomial_residual(int degree,
                                           const ParitySpectrum& spec_even,
                                           const ParitySpectrum& spec_odd,
                                           const std::vector<Complex>& grid,
                                           double threshold) {
  if (degree != 1 && degree != 4) {
    throw std::domain_error("cocycle_polynomial_residual: N in {1, 4}");
  }
  const double phi = dynamical_constants(degree).phi;
  auto acc = make_acc(degree == 4 ? "cocycle_cubic" : "cocycle_quadratic",
                      degree, threshold);
  for (const Complex& lam : grid) {
    Complex d[3];
    for (int ell = 0; ell < 3; ++ell) {
      d[ell] = rotated_full(spec_even, spec_odd, phi, ell, lam);
    }
    Complex res;
    double scale = 1.0;
    if (degree == 4) {
      res = d[0] * d[1] * d[2] - (d[0] + d[1] + d[2] + 2.0);
      scale = std::max(std::abs(d[0] * d[1] * d[2]),
                       std::abs(d[0]) + std::abs(d[1]) + std::abs(d[2]) + 2.0);
    } else {
      res = d[0] * d[0] + d[1] * d[1] + d[2] * d[2] -
            2.0 * (d[1] * d[2] + d[2] * d[0] + d[0] * d[1]) + 4.0;
      scale = std::max(
          {1.0, std::norm(d[0]), std::norm(d[1]), std::norm(d[2])});
      // cross-check the same polynomial through the Airy oracle,
      // D_l = -2 pi (Ai^2)'(j^{-l} lambda)
      Complex da[3];
      const Complex rot[3] = {Complex(1.0, 0.0), kJ2, kJ};
      for (int ell = 0; ell < 3; ++ell) {
        const AiryValue a = airy(rot[ell] * lam);
        da[ell] = -4.0 * kPi * a.ai * a.ai_prime;
      }
      const Complex res_airy =
          da[0] * da[0] + da[1] * da[1] + da[2] * da[2] -
          2.0 * (da[1] * da[2] + da[2] * da[0] + da[0] * da[1]) + 4.0;
      res = std::abs(res) > std::abs(res_airy) ? res : res_airy;
    }
    acc.add(lam, std::abs(res), scale);
  }
  return acc.finish();
}

IdentityReport stokes_equation_residual(int degree,
                                        const ParitySpectrum& spec_even,
                                        const ParitySpectrum& spec_odd,
                                        const std::vector<Complex>& grid,
                                        double threshold) {
  if (degree != 1 && degree != 3 && degree != 4) {
    throw std::domain_error("stokes_equation_residual: N in {1, 3, 4}");
  }
  const double phi = dynamical_constants(degree).phi;
  auto stokes_at = [&](int ell, Complex lam) {
    return stokes_multiplier(spec_even, spec_odd, degree,
                             std::polar(1.0, ell * phi) * lam);
  };
  std::string id = degree == 4   ? "stokes_cubic"
                   : degree == 3 ? "stokes_shift_pair"
                                 : "stokes_constant";
  auto acc = make_acc(std::move(id), degree, threshold);
  for (const Complex& lam : grid) {
    Complex res;
    double scale = 1.0;
    if (degree == 4) {
      const Complex c0 = stokes_at(0, lam), c1 = stokes_at(1, lam),
                    c2 = stokes_at(2, lam);
      res = c0 * c1 * c2 - (c0 + c1 + c2);
      scale = std::max(std::abs(c0 * c1 * c2),
                       std::abs(c0) + std::abs(c1) + std::abs(c2));
    } else if (degree == 3) {
      const Complex c0 = stokes_at(0, lam), c2 = stokes_at(2, lam),
                    c3 = stokes_at(3, lam);
      res = c2 * c3 - c0 - 1.0;
      scale = std::max({1.0, std::abs(c2 * c3), std::abs(c0)});
    } else {
      res = stokes_at(0, lam) - 1.0;
      scale = 1.0;
    }
    acc.add(lam, std::abs(res), scale);
  }
  return acc.finish();
}

double ZetaTable::value(Parity p, int n) const {
  auto it = values.find({p, n});
  if (it == values.end()) {
    throw std::runtime_error("sum_rule_report: missing zeta value Z" +
                             std::string(p == Parity::even ? "+" : "-") + "(" +
                             std::to_string(n) + ")");
  }
  return it->second;
}

double ZetaTable::prime(Parity p) const {
  auto it = prime0.find(p);
  if (it == prime0.end()) {
    throw std::runtime_error("sum_rule_report: missing zeta derivative Z" +
                             std::string(p == Parity::even ? "+" : "-") +
                             "'(0)");
  }
  return it->second;
}

ZetaTable make_zeta_table(const ParitySpectrum& spec_even,
                          const ParitySpectrum& spec_odd, int n_max) {
  ZetaTable t;
  t.prime0[Parity::even] = zeta_prime_zero(spec_even);
  t.prime0[Parity::odd] = zeta_prime_zero(spec_odd);
  const double mu = dynamical_constants(spec_even.degree).mu;
  for (int n = 1; n <= n_max; ++n) {
    if (std::abs(n - mu) < 1e-12) continue;  // simple pole of the zeta
    t.values[{Parity::even, n}] = zeta_value(spec_even, n).value;
    t.values[{Parity::odd, n}] = zeta_value(spec_odd, n).value;
  }
  return t;
}

std::vector<IdentityReport> sum_rule_report(int degree, const ZetaTable& z,
                                            double threshold) {
  std::vector<IdentityReport> out;
  const DynamicalConstants c = dynamical_constants(degree);
  const double phi = c.phi;
  auto push = [&](const std::string& id, double lhs, double rhs,
                  double scale) {
    auto acc = make_acc(id, degree, threshold);
    acc.add(0.0, std::abs(lhs - rhs), std::max(scale, 1.0));
    out.push_back(acc.finish());
  };
  const double zp_e = z.prime(Parity::even), zp_o = z.prime(Parity::odd);
  // the rank-1 entries sit on the zeta pole when degree == 2
  const double z1p = degree == 2 ? 0.0 : z.value(Parity::even, 1);
  const double z1m = degree == 2 ? 0.0 : z.value(Parity::odd, 1);
  const double z2p = z.value(Parity::even, 2), z2m = z.value(Parity::odd, 2);

  // rank 0..2 generic rules
  push("rank0_log_det", zp_e + zp_o, std::log(std::sin(phi / 4.0)), 1.0);
  if (degree != 2) {
    push("rank1_moment", std::sin(phi / 4.0) * z1p,
         std::sin(3.0 * phi / 4.0) * z1m, std::abs(z1p) + std::abs(z1m));
    const double rhs2 = std::sin(phi / 4.0) *
                        std::pow(2.0 * std::cos(phi / 4.0) * (z1p - z1m), 2);
    push("rank2_moment", std::sin(3.0 * phi / 4.0) * z2p -
                               std::sin(5.0 * phi / 4.0) * z2m,
         rhs2, std::abs(z2p) + std::abs(z2m));
  }

  // closed forms valid for every degree
  const double inv = 1.0 / (degree + 2.0);
  const double zm0_closed =
      0.5 * degree * inv * std::log(degree + 2.0) +
      0.5 * std::log(kPi) - log_gamma(inv);
  push("closed_form_det_odd", zp_o, zm0_closed, std::abs(zp_o));
  if (degree != 2) {
    const double diff_closed =
        0.5 / std::sqrt(kPi) * std::pow(2.0 * inv, 2.0 * degree * inv) *
        std::sin(phi / 4.0) *
        std::exp(log_gamma(inv) + log_gamma(2.0 * inv) + log_gamma(3.0 * inv) -
                 log_gamma(0.5 + 2.0 * inv));
    push("closed_form_moment_gap", z1p - z1m, diff_closed,
         std::abs(z1p) + std::abs(z1m) + std::abs(diff_closed));
  }

  if (degree == 4) {
    const double z3p = z.value(Parity::even, 3), z3m = z.value(Parity::odd, 3);
    const double z1 = z1p + z1m, z2 = z2p + z2m, z3 = z3p + z3m;
    push("quartic_log_det", zp_e + zp_o, -std::log(2.0), 1.0);
    push("quartic_moment1", 0.5 * z1p - z1m, 0.0, std::abs(z1p));
    push("quartic_moment2", z2p - 0.5 * z2m, 1.5 * (z1p - z1m) * (z1p - z1m),
         std::abs(z2p));
    push("quartic_moment3", z3, z1 * z1 * z1 / 6.0 - 0.5 * z1 * z2,
         std::abs(z3));
  }
  if (degree == 1) {
    const double rho = std::pow(3.0, 5.0 / 6.0) / (2.0 * kPi) *
                       std::pow(gamma_fn(2.0 / 3.0), 2);
    const double z3p = z.value(Parity::even, 3), z3m = z.value(Parity::odd, 3);
    const double z1 = z1p + z1m, z2 = z2p + z2m, z3 = z3p + z3m;
    push("linear_log_det", zp_e + zp_o, -std::log(2.0 / std::sqrt(3.0)), 1.0);
    push("linear_moment1_even", z1p, 0.0, std::abs(z1m));
    push("linear_moment2_odd", z2m, z1m * z1m, std::abs(z2m));
    push("linear_moment3", z3, 2.5 * z1 * z1 * z1 - 1.5 * z1 * z2,
         std::abs(z3));
    push("airy_log_det_gap", zp_e - zp_o, -std::log(rho), 1.0);
    push("airy_moment1_odd", z1m, -rho, rho);
    push("airy_moment2_even", z2p, 1.0 / rho, 1.0 / rho);
    push("airy_moment3_even", z3p, 1.0, 1.0);
    push("airy_moment3_odd", z3m, -rho * rho * rho + 0.5, 1.0);
  }
  return out;
}

}  // namespace specdet
