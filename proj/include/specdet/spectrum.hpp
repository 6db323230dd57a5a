#pragma once

#include <utility>
#include <vector>

#include "specdet/constants.hpp"

namespace specdet {

enum class Parity { even, odd };

inline int parity_offset(Parity p) { return p == Parity::odd ? 1 : 0; }

/// One parity sector of a spectrum.  Labels k run over even (odd) integers;
/// entries for labels < cutoff are stored, labels >= cutoff are pinned to the
/// Bohr-Sommerfeld values.
struct ParitySpectrum {
  int degree = 0;
  Parity parity = Parity::even;
  std::vector<double> levels;  // level with label parity_offset + 2*i
  int cutoff = 0;              // K
  double tol = 0.0;
  bool converged = false;

  /// Eigenvalue for a label of matching parity (stored or semiclassical).
  double level(int label) const;
  int count() const { return static_cast<int>(levels.size()); }
  int label_of(int index) const { return parity_offset(parity) + 2 * index; }
};

struct ConvergenceStats {
  int iterations = 0;
  std::vector<double> displacement_norms;  // max relative change per sweep
  double contraction_estimate = 0.0;       // signed geometric ratio
};

/// Bohr-Sommerfeld level (2 pi (k + 1/2) / b0)^{1/mu}.
double semiclassical_level(int degree, int k);

/// arg(level - e^{-i phi} lambda), principal branch.
double subtended_angle(double lambda, double level, double phi);

/// Continuous determination of Arg D_p(-e^{-i phi} lambda): the angle sum
/// over the spectrum, with the pinned semiclassical region summed in closed
/// form and, for N = 1, the divergent part regularized per the growth order.
double arg_det(const ParitySpectrum& spec, double lambda);

/// Sigma_p(lambda) = arg_det / pi (N = 2: lambda / 4 in closed form).
double sigma(const ParitySpectrum& spec, double lambda);

/// Solve sigma(spec, lambda) = (k + 1/2 +- kappa/2)/2 for lambda by a
/// bracketed search; monotonicity on the bracket is asserted.
double solve_level(const ParitySpectrum& spec, int label);

struct IterateOptions {
  int max_sweeps = 60;
};

/// Fixed-point iteration of the exact quantization map from semiclassical
/// trial levels.
std::pair<ParitySpectrum, ConvergenceStats> iterate_spectrum(
    int degree, Parity parity, int cutoff, double eps, IterateOptions = {});

/// Zeta values of the pure Bohr-Sommerfeld spectrum of one parity sector,
/// by analytic continuation (Hurwitz zeta); exact for N = 2.
double semiclassical_zeta(int degree, Parity parity, double s);

/// Tail sum_{labels k >= from_label} lambda_k^{-s} over semiclassical levels.
double semiclassical_zeta_tail(int degree, Parity parity, double s,
                               int from_label);

/// d/ds at s=0 of the semiclassical parity zeta (regularized log-sum).
double semiclassical_zeta_prime0(int degree, Parity parity);

}  // namespace specdet
