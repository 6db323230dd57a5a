#include "specdet/determinant.hpp"

#include <cmath>
#include <stdexcept>

#include "specdet/errors.hpp"
#include "specdet/special.hpp"

namespace specdet {

namespace {

constexpr double kPi = 3.14159265358979323846;

double mu_of(int degree) { return (degree + 2.0) / (2.0 * degree); }

// Richardson step assuming error ~ K^{-p}; s2 belongs to the larger horizon.
double richardson(double s1, double s2, double ratio, double p) {
  const double w = std::pow(ratio, p);
  return (w * s2 - s1) / (w - 1.0);
}

// Extrapolate partial sums of the level-by-level corrections against the
// semiclassical spectrum.  term(i) must be the i-th correction; the tail
// behaves like K^{-p} with subleading K^{-p-1}.
template <typename Term>
double extrapolate_corrections(const ParitySpectrum& spec, double p,
                               Term term) {
  const int n = spec.count();
  double s = 0.0;
  if (n < 16) {
    for (int i = 0; i < n; ++i) s += term(i);
    return s;
  }
  const int n1 = n / 4, n2 = n / 2;
  double s1 = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    s += term(i);
    if (i == n1 - 1) s1 = s;
    if (i == n2 - 1) s2 = s;
  }
  const double a1 = richardson(s1, s2, 2.0, p);
  const double a2 = richardson(s2, s, 2.0, p);
  return richardson(a1, a2, 2.0, p + 1.0);
}

void require_converged(const ParitySpectrum& spec, const char* who) {
  if (!spec.converged) {
    throw NumericalError(std::string(who) + ": spectrum not converged");
  }
}

}  // namespace

SpectralZeta zeta_value(const ParitySpectrum& spec, double s) {
  const double mu = mu_of(spec.degree);
  if (!(s > -mu)) throw std::domain_error("zeta_value: requires s > -mu");
  if (std::abs(s - mu) < 1e-12) {
    throw NumericalError("zeta_value: simple pole at s = mu");
  }
  require_converged(spec, "zeta_value");
  SpectralZeta z;
  z.parity = spec.parity;
  z.s = s;
  z.regularized = (s < mu);
  double value = semiclassical_zeta(spec.degree, spec.parity, s);
  value += extrapolate_corrections(spec, 1.0 + s / mu, [&](int i) {
    const double bs = semiclassical_level(spec.degree, spec.label_of(i));
    return std::pow(spec.levels[i], -s) - std::pow(bs, -s);
  });
  z.value = value;
  return z;
}

double zeta_plain(const ParitySpectrum& spec, double s) {
  const double mu = mu_of(spec.degree);
  if (!(s > mu)) throw std::domain_error("zeta_plain: requires s > mu");
  double sum = 0.0;
  for (int i = 0; i < spec.count(); ++i) sum += std::pow(spec.levels[i], -s);
  return sum + semiclassical_zeta_tail(spec.degree, spec.parity, s,
                                       spec.cutoff);
}

double zeta_prime_zero(const ParitySpectrum& spec) {
  require_converged(spec, "zeta_prime_zero");
  const double corr = extrapolate_corrections(spec, 1.0, [&](int i) {
    const double bs = semiclassical_level(spec.degree, spec.label_of(i));
    return std::log(spec.levels[i]) - std::log(bs);
  });
  return semiclassical_zeta_prime0(spec.degree, spec.parity) - corr;
}

namespace {

// Product tail: sum_{labels >= from} log(1 + lambda/lambda_k) expanded in
// inverse semiclassical moments; genus 1 starts at m = 2 (the m = 1 part is
// carried by the e^{-lambda/lambda_k} convergence factors).
Complex log_product_tail(const ParitySpectrum& spec, Complex lambda,
                         int from_label, int m_min) {
  if (lambda == Complex(0.0)) return 0.0;
  Complex acc = 0.0;
  Complex p = std::pow(lambda, m_min - 1);
  double sign = (m_min % 2 == 0) ? -1.0 : 1.0;
  for (int m = m_min; m <= 400; ++m) {
    p *= lambda;
    const double t =
        semiclassical_zeta_tail(spec.degree, spec.parity, double(m),
                                from_label);
    const Complex term = sign / double(m) * p * t;
    acc += term;
    sign = -sign;
    if (std::abs(p) * t < 1e-17 * (1.0 + std::abs(acc)) && m > m_min + 2) {
      return acc;
    }
  }
  throw NumericalError("det_value: product tail did not converge");
}

Complex sector_determinant(const ParitySpectrum& spec, Complex lambda) {
  const int off = parity_offset(spec.parity);
  const int buffer_end = 2 * std::max(spec.cutoff, 16);
  const int genus = (spec.degree == 1) ? 1 : 0;
  Complex prod = 1.0;
  if (genus == 0) {
    for (int i = 0; i < spec.count(); ++i) {
      prod *= 1.0 + lambda / spec.levels[i];
    }
    for (int k = spec.cutoff + ((spec.cutoff - off) % 2 + 2) % 2;
         k < buffer_end; k += 2) {
      prod *= 1.0 + lambda / semiclassical_level(spec.degree, k);
    }
    prod *= std::exp(log_product_tail(spec, lambda, buffer_end, 1));
    return std::exp(-zeta_prime_zero(spec)) * prod;
  }
  // genus 1 (N = 1)
  for (int i = 0; i < spec.count(); ++i) {
    const Complex w = lambda / spec.levels[i];
    prod *= (1.0 + w) * std::exp(-w);
  }
  for (int k = spec.cutoff + ((spec.cutoff - off) % 2 + 2) % 2;
       k < buffer_end; k += 2) {
    const Complex w = lambda / semiclassical_level(spec.degree, k);
    prod *= (1.0 + w) * std::exp(-w);
  }
  prod *= std::exp(log_product_tail(spec, lambda, buffer_end, 2));
  const double z1 = zeta_value(spec, 1.0).value;
  return std::exp(-zeta_prime_zero(spec) + z1 * lambda) * prod;
}

}  // namespace

DeterminantValue det_value(const ParitySpectrum& spec_even,
                           const ParitySpectrum& spec_odd, Complex lambda) {
  DeterminantValue d;
  d.lambda = lambda;
  const int degree = spec_even.degree;
  if (degree != spec_odd.degree) {
    throw std::domain_error("det_value: mixed degrees");
  }
  if (degree == 2) {
    // D_p(lambda) = 2^{±1/2} sqrt(2 pi) 2^{-lambda/2} / Gamma((2 ∓ 1 + lambda)/4)
    const Complex pw = std::exp(-0.5 * lambda * std::log(2.0));
    const double r = std::sqrt(2.0 * kPi);
    d.d_plus = std::sqrt(2.0) * r * pw / gamma_fn((1.0 + lambda) / 4.0);
    d.d_minus = r / std::sqrt(2.0) * pw / gamma_fn((3.0 + lambda) / 4.0);
    d.genus = 0;
    d.d_full = d.d_plus * d.d_minus;
    return d;
  }
  const double radius =
      semiclassical_level(degree, std::max(spec_even.cutoff / 2, 2));
  if (std::abs(lambda) > radius) {
    throw NumericalError("det_value: |lambda| outside the validated radius");
  }
  d.genus = (degree == 1) ? 1 : 0;
  d.d_plus = sector_determinant(spec_even, lambda);
  d.d_minus = sector_determinant(spec_odd, lambda);
  d.d_full = d.d_plus * d.d_minus;
  return d;
}

TaylorCoefficients log_det_taylor(const ParitySpectrum& spec_even,
                                  const ParitySpectrum& spec_odd, int n_max) {
  if (spec_even.degree == 2) {
    throw std::domain_error("log_det_taylor: N = 2 is excluded");
  }
  if (n_max < 0 || n_max > 12) {
    throw std::domain_error("log_det_taylor: n_max in [0, 12]");
  }
  TaylorCoefficients tc;
  tc.plus.push_back(-zeta_prime_zero(spec_even));
  tc.minus.push_back(-zeta_prime_zero(spec_odd));
  double sign = -1.0;  // (-1)^n
  for (int n = 1; n <= n_max; ++n) {
    tc.plus.push_back(-zeta_value(spec_even, n).value * sign / n);
    tc.minus.push_back(-zeta_value(spec_odd, n).value * sign / n);
    sign = -sign;
  }
  return tc;
}

double asymptotic_a0(int degree) {
  if (degree == 2) throw std::domain_error("asymptotic_a0: N = 2 is excluded");
  const DynamicalConstants c = dynamical_constants(degree);
  return *c.a0;
}

double asymptotic_check(const ParitySpectrum& spec_even,
                        const ParitySpectrum& spec_odd, double lambda_large) {
  if (!(lambda_large >= 20.0)) {
    throw std::domain_error("asymptotic_check: lambda >= 20");
  }
  const DeterminantValue d = det_value(spec_even, spec_odd, lambda_large);
  const double a0 = asymptotic_a0(spec_even.degree);
  const double mu = mu_of(spec_even.degree);
  return std::abs(std::log(d.d_full.real()) /
                      (a0 * std::pow(lambda_large, mu)) -
                  1.0);
}

Complex stokes_multiplier(const ParitySpectrum& spec_even,
                          const ParitySpectrum& spec_odd, int degree,
                          Complex lambda) {
  if (degree == 2) {
    throw std::domain_error("stokes_multiplier: N = 2 is excluded");
  }
  const DynamicalConstants c = dynamical_constants(degree);
  const Complex rot2 = std::polar(1.0, 2.0 * c.phi);
  const DeterminantValue d0 = det_value(spec_even, spec_odd, lambda);
  const DeterminantValue d2 = det_value(spec_even, spec_odd, rot2 * lambda);
  const Complex ph = std::polar(1.0, 0.5 * c.phi);
  return (ph * d0.d_plus * d2.d_minus - d0.d_minus * d2.d_plus / ph) /
         Complex(0.0, 2.0);
}

}  // namespace specdet
