#pragma once

#include <complex>

namespace specdet {

using Complex = std::complex<double>;

/// log Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

/// Gamma(x) = exp(log_gamma(x)), x > 0.
double gamma_fn(double x);

/// Gamma(z) for complex z (Lanczos). Used for the harmonic closed form.
Complex gamma_fn(Complex z);

/// Hurwitz zeta  zeta(s, a) = sum_{n>=0} (n+a)^{-s}, continued analytically
/// to all real s != 1 (Euler-Maclaurin). Requires a > 0.
double hurwitz_zeta(double s, double a);

/// d/ds zeta(s, a) at s = 0, i.e. log(Gamma(a)/sqrt(2 pi)).
double hurwitz_zeta_deriv0(double a);

enum class AiryMethod { series, asymptotic };

struct AiryValue {
  Complex z;
  Complex ai;        // Ai(z)
  Complex ai_prime;  // Ai'(z)
  AiryMethod method;
};

/// Ai(z) and Ai'(z) for |z| <= 40 (working range; NumericalError beyond).
/// Maclaurin series for |z| <= 6, asymptotic expansion beyond, with the
/// three-solution connection formula handling directions near the negative
/// real axis.
AiryValue airy(Complex z);

enum class AiryKind { Ai, AiPrime };

/// Magnitude of the s-th zero of Ai(-x) (kind Ai) or Ai'(-x) (kind AiPrime),
/// s >= 1.  Bracketed from the Bohr-Sommerfeld estimates and bisected to
/// better than 1e-10.
double airy_zero(AiryKind kind, int s);

}  // namespace specdet
