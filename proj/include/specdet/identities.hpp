#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "specdet/determinant.hpp"
#include "specdet/spectrum.hpp"

namespace specdet {

struct IdentityReport {
  std::string identity_id;
  int degree = 0;
  std::vector<Complex> sample_points;
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;
  double threshold = 1e-5;  // on the relative residual
  bool passed = false;
};

/// 24 real points on [0, lambda_4] plus 8 points on the unit circle.
std::vector<Complex> default_grid(const ParitySpectrum& spec_even);

/// Residual of e^{i phi/4} D^+ D_1^- - e^{-i phi/4} D_1^+ D^- = 2i, checked
/// for every global subscript shift mod L.
IdentityReport wronskian_residual(int degree, const ParitySpectrum& spec_even,
                                  const ParitySpectrum& spec_odd,
                                  const std::vector<Complex>& grid,
                                  double threshold = 1e-5);

/// Determinant of the L = 3 shifted linear system: 2i sin(3 phi/4) D_0^+ D_1^+ D_2^+.
Complex linear_system_determinant(int degree, const ParitySpectrum& spec_even,
                                  const ParitySpectrum& spec_odd,
                                  Complex lambda);

/// N = 4 only: D_0^- = (D_0^+ - j^2 D_1^+ - j D_2^+)/(D_1^+ D_2^+) and the
/// mirrored formula.
IdentityReport pairing_residual(const ParitySpectrum& spec_even,
                                const ParitySpectrum& spec_odd,
                                const std::vector<Complex>& grid,
                                double threshold = 1e-5);

/// N = 1 three-solution dependence, product side.
IdentityReport dependence_residual(const ParitySpectrum& spec_even,
                                   const ParitySpectrum& spec_odd,
                                   const std::vector<Complex>& grid,
                                   double threshold = 1e-5);

/// N = 1 three-solution dependence evaluated through the Airy oracle alone.
IdentityReport dependence_residual_airy(const std::vector<Complex>& grid,
                                        double threshold = 1e-9);

/// Branch-free cocycle consequences: N = 4: D0 D1 D2 = D0 + D1 + D2 + 2;
/// N = 1: D0^2 + D1^2 + D2^2 - 2(D1 D2 + D2 D0 + D0 D1) + 4 = 0.
IdentityReport cocycle_polynomial_residual(int degree,
                                           const ParitySpectrum& spec_even,
                                           const ParitySpectrum& spec_odd,
                                           const std::vector<Complex>& grid,
                                           double threshold = 1e-5);

/// Stokes functional equations: N = 4: C0 C1 C2 = C0 + C1 + C2;
/// N = 3: C2 C3 = C0 + 1; N = 1: C = 1.
IdentityReport stokes_equation_residual(int degree,
                                        const ParitySpectrum& spec_even,
                                        const ParitySpectrum& spec_odd,
                                        const std::vector<Complex>& grid,
                                        double threshold = 1e-5);

/// Zeta values keyed by (parity, n) plus the derivatives at 0.
struct ZetaTable {
  std::map<std::pair<Parity, int>, double> values;
  std::map<Parity, double> prime0;
  double value(Parity p, int n) const;
  double prime(Parity p) const;
};

ZetaTable make_zeta_table(const ParitySpectrum& spec_even,
                          const ParitySpectrum& spec_odd, int n_max = 3);

/// All sum rules applicable at the given degree: the generic rank 0..2
/// relations, the closed forms for Z^-'(0) and Z^+(1) - Z^-(1), and the
/// special quartic/linear families.
std::vector<IdentityReport> sum_rule_report(int degree, const ZetaTable& zetas,
                                            double threshold = 1e-5);

}  // namespace specdet
