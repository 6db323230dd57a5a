#include "specdet/constants.hpp"

#include <cmath>
#include <stdexcept>

#include "specdet/special.hpp"

namespace specdet {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

DynamicalConstants dynamical_constants(int degree) {
  if (degree < 1) throw std::domain_error("dynamical_constants: N >= 1");
  DynamicalConstants c;
  c.degree = degree;
  const double n = degree;
  c.mu = (n + 2.0) / (2.0 * n);
  c.phi = 4.0 * kPi / (n + 2.0);
  c.symmetry_order = (degree % 2 == 0) ? degree / 2 + 1 : degree + 2;
  c.b0 = 2.0 * std::sqrt(kPi) / n *
         std::exp(log_gamma(1.0 / n) - log_gamma(1.5 + 1.0 / n));
  c.kappa = (n - 2.0) / (n + 2.0);
  if (degree != 2) {
    c.a0 = c.b0 / (2.0 * std::sin(kPi * c.mu));
  }
  return c;
}

DualityReport duality_check(int degree) {
  if (degree < 1) throw std::domain_error("duality_check: N >= 1");
  DualityReport r;
  r.degree = degree;
  if (4 % degree != 0) {  // N' = 4/N must be a positive integer
    r.has_dual = false;
    return r;
  }
  r.has_dual = true;
  r.dual_degree = 4 / degree;
  const DynamicalConstants a = dynamical_constants(degree);
  const DynamicalConstants b = dynamical_constants(r.dual_degree);
  const double tol = 1e-14;
  r.phi_sum_ok = std::abs(a.phi + b.phi - 2.0 * kPi) < tol;
  r.inverse_mu_sum_ok = std::abs(1.0 / a.mu + 1.0 / b.mu - 2.0) < tol;
  r.order_match_ok = a.symmetry_order == b.symmetry_order;
  r.kappa_flip_ok = std::abs(a.kappa + b.kappa) < tol;
  return r;
}

}  // namespace specdet
