#pragma once

#include <complex>
#include <vector>

#include "specdet/spectrum.hpp"

namespace specdet {

using Complex = std::complex<double>;

struct SpectralZeta {
  Parity parity = Parity::even;
  double s = 0.0;
  double value = 0.0;
  bool regularized = false;  // true when s < mu (counterterms required)
};

/// Z_p(s) for s > -mu, s != mu (simple pole).  Computed by splitting off the
/// semiclassical sector (continued in closed form) and extrapolating the
/// convergent level-by-level corrections in the horizon.
SpectralZeta zeta_value(const ParitySpectrum& spec, double s);

/// Plain truncated sum plus semiclassical tail; valid cross-check for s > mu.
double zeta_plain(const ParitySpectrum& spec, double s);

/// Z_p'(0); det H_p = exp(-Z_p'(0)).
double zeta_prime_zero(const ParitySpectrum& spec);

struct DeterminantValue {
  Complex lambda;
  Complex d_plus;
  Complex d_minus;
  Complex d_full;  // d_plus * d_minus
  int genus = 0;   // 0 for N >= 2, 1 for N = 1
};

/// Zeta-regularized determinants D_p(lambda) = det(H_p + lambda) as entire
/// functions: genus-0 Hadamard product (N > 2), genus-1 product (N = 1),
/// gamma-function closed form (N = 2).  Validated for |lambda| <= lambda_{K/2}.
DeterminantValue det_value(const ParitySpectrum& spec_even,
                           const ParitySpectrum& spec_odd, Complex lambda);

/// Coefficients of log D_p about 0: index 0 is -Z_p'(0), index n >= 1 is
/// -Z_p(n) (-1)^n / n.  N != 2, n_max <= 12.
struct TaylorCoefficients {
  std::vector<double> plus;
  std::vector<double> minus;
};
TaylorCoefficients log_det_taylor(const ParitySpectrum& spec_even,
                                  const ParitySpectrum& spec_odd, int n_max);

/// Leading asymptotic coefficient a0 = b0 / (2 sin pi mu), N != 2.
double asymptotic_a0(int degree);

/// |log D(lambda) / (a0 lambda^mu) - 1| at large real lambda.
double asymptotic_check(const ParitySpectrum& spec_even,
                        const ParitySpectrum& spec_odd, double lambda_large);

/// Stokes multiplier C_0 = (2i)^{-1} (e^{i phi/2} D_0^+ D_2^- -
/// e^{-i phi/2} D_2^+ D_0^-), with D_l(.) = D(e^{i l phi} .).  N != 2.
Complex stokes_multiplier(const ParitySpectrum& spec_even,
                          const ParitySpectrum& spec_odd, int degree,
                          Complex lambda);

}  // namespace specdet
