#pragma once

#include <optional>

namespace specdet {

/// The N-dependent constants of one homogeneous |q|^N problem.
struct DynamicalConstants {
  int degree = 0;       // N
  double mu = 0.0;      // growth order (N+2)/(2N)
  double phi = 0.0;     // symmetry angle 4 pi / (N+2)
  int symmetry_order = 0;  // L: N/2+1 (even N), N+2 (odd N)
  double b0 = 0.0;      // classical action constant
  std::optional<double> a0;  // leading asymptotic coefficient; absent at N=2
  double kappa = 0.0;   // parity offset (N-2)/(N+2)
};

DynamicalConstants dynamical_constants(int degree);

struct DualityReport {
  int degree = 0;
  bool has_dual = false;
  int dual_degree = 0;
  bool phi_sum_ok = false;       // phi + phi' = 2 pi
  bool inverse_mu_sum_ok = false;  // 1/mu + 1/mu' = 2
  bool order_match_ok = false;   // L = L'
  bool kappa_flip_ok = false;    // kappa' = -kappa
  bool all_ok() const {
    return has_dual && phi_sum_ok && inverse_mu_sum_ok && order_match_ok &&
           kappa_flip_ok;
  }
};

/// Duality pairing N N' = 4; integer duals exist only for N in {1, 2, 4}.
DualityReport duality_check(int degree);

}  // namespace specdet
