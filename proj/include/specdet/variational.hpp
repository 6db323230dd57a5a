#pragma once

#include <vector>

#include "specdet/spectrum.hpp"

namespace specdet {

/// <psi_n' | |q|^N | psi_n''> in the orthonormal harmonic-oscillator basis,
/// evaluated by Gauss-Legendre quadrature against stable oscillator
/// recurrences.  Zero for n' != n'' mod 2; indices limited to n' + n'' <= 360.
double matrix_element_qn(int degree, int n1, int n2);

/// Same element through the closed-form Gamma-function double sum (log-space
/// with sign tracking).  Kept as an independent cross-check; the alternating
/// sum loses all precision once n' + n'' grows past ~60.
double matrix_element_qn_series(int degree, int n1, int n2);

/// Dense symmetric matrix, row-major.
struct SymmetricMatrix {
  int dim = 0;
  std::vector<double> data;
  double& at(int i, int j) { return data[i * dim + j]; }
  double at(int i, int j) const { return data[i * dim + j]; }
};

/// H = T + V on the even/odd sub-basis; the kinetic block is
/// diag(2n+1) - <q^2>, so N = 2 reproduces diag(2n+1) exactly.
SymmetricMatrix build_hamiltonian(int degree, Parity parity, int size);

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations,
/// sorted ascending; off-diagonal norm driven below 1e-12 * ||A||.
std::vector<double> jacobi_eigenvalues(SymmetricMatrix a);

struct RitzResult {
  int degree = 0;
  Parity parity = Parity::even;
  std::vector<int> basis_sizes;
  std::vector<std::vector<double>> eigenvalues;  // per size, sorted
  std::vector<int> stable_digits;  // per level, across the two largest sizes
};

/// Rayleigh-Ritz truncations at the given ascending sizes.
RitzResult ritz_spectrum(int degree, Parity parity,
                         const std::vector<int>& sizes = {20, 30, 40});

}  // namespace specdet
