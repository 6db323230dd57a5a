#include "specdet/special.hpp"

#include <cmath>
#include <stdexcept>

#include "specdet/errors.hpp"

namespace specdet {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Bernoulli numbers B_2 .. B_16 for the Euler-Maclaurin tail.
constexpr double kBernoulli[] = {
    1.0 / 6,  -1.0 / 30,   1.0 / 42,      -1.0 / 30,
    5.0 / 66, -691.0 / 2730, 7.0 / 6,     -3617.0 / 510};

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma: requires x > 0");
  }
  return std::lgamma(x);
}

double gamma_fn(double x) { return std::exp(log_gamma(x)); }

Complex gamma_fn(Complex z) {
  // Lanczos, g = 7, 9 coefficients.
  static const double c[9] = {
      0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
      771.32342877765313,   -176.61502916214059, 12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (z.real() < 0.5) {
    // reflection
    return kPi / (std::sin(kPi * z) * gamma_fn(1.0 - z));
  }
  z -= 1.0;
  Complex x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z + double(i));
  Complex t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

double hurwitz_zeta(double s, double a) {
  if (!(a > 0.0)) throw std::domain_error("hurwitz_zeta: requires a > 0");
  if (std::abs(s - 1.0) < 1e-12) {
    throw NumericalError("hurwitz_zeta: pole at s = 1");
  }
  // Shift a upward until the Euler-Maclaurin tail converges fast.
  double sum = 0.0;
  double aa = a;
  while (aa < 18.0) {
    sum += std::pow(aa, -s);
    aa += 1.0;
  }
  // zeta(s, aa) = aa^{1-s}/(s-1) + aa^{-s}/2 + EM corrections
  const double inv_a = 1.0 / aa;
  double result = std::pow(aa, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(aa, -s);
  // sum_{j>=1} B_{2j}/(2j)! * (s)(s+1)...(s+2j-2) * aa^{-s-2j+1}
  double poch = s;                         // rising factorial (s)_{2j-1}
  double factor = std::pow(aa, -s - 1.0);  // aa^{-s-2j+1}
  double fact = 2.0;                       // (2j)!
  for (int j = 1; j <= 8; ++j) {
    result += kBernoulli[j - 1] / fact * poch * factor;
    // advance to next j
    poch *= (s + 2 * j - 1) * (s + 2 * j);
    factor *= inv_a * inv_a;
    fact *= (2 * j + 1) * (2 * j + 2);
  }
  return sum + result;
}

double hurwitz_zeta_deriv0(double a) {
  if (!(a > 0.0)) throw std::domain_error("hurwitz_zeta_deriv0: requires a > 0");
  return log_gamma(a) - 0.5 * std::log(2.0 * kPi);
}

namespace {

// Maclaurin series branch; converges everywhere, used for |z| <= 6.
AiryValue airy_series(Complex z) {
  const double c1 = std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0);
  const double c2 = std::pow(3.0, -1.0 / 3.0) / std::tgamma(1.0 / 3.0);
  const Complex z3 = z * z * z;
  // f = sum z^{3k} prod..., g = sum z^{3k+1} prod...; fp, gp their derivatives.
  Complex f = 1.0, g = z, fp = 0.0, gp = 1.0;
  Complex tf = 1.0, tg = z;  // current terms of f and g
  for (int k = 1; k <= 60; ++k) {
    tf *= z3 / double(3 * k * (3 * k - 1));
    tg *= z3 / double(3 * k * (3 * k + 1));
    f += tf;
    g += tg;
    fp += tf * (3.0 * k) / z;  // d/dz z^{3k} = 3k z^{3k-1}
    gp += tg * (3.0 * k + 1.0) / z;
    if (std::abs(tf) < 1e-18 && std::abs(tg) < 1e-18) break;
  }
  if (std::abs(z) < 1e-300) {  // fp formula divides by z
    fp = 0.0;
    gp = 1.0;
  }
  return {z, c1 * f - c2 * g, c1 * fp - c2 * gp, AiryMethod::series};
}

// Poincare expansion, adequate for |z| >= 6 with |arg z| <= 2 pi / 3.
AiryValue airy_asymptotic_direct(Complex z) {
  const Complex zeta = 2.0 / 3.0 * std::pow(z, 1.5);
  const Complex inv_zeta = 1.0 / zeta;
  Complex su = 1.0, sv = 1.0;
  double u = 1.0;
  Complex pw = 1.0;
  double prev = 1e300;
  for (int k = 1; k <= 40; ++k) {
    u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
         (216.0 * k * (2.0 * k - 1.0));
    pw *= -inv_zeta;
    const double mag = u * std::abs(pw);
    if (mag > prev) break;  // optimal truncation
    prev = mag;
    su += u * pw;
    sv += u * (6.0 * k + 1.0) / (1.0 - 6.0 * k) * pw;
    if (mag < 1e-18) break;
  }
  const Complex q = std::pow(z, 0.25);
  const Complex e = std::exp(-zeta);
  const double r = 0.5 / std::sqrt(kPi);
  return {z, r * e * su / q, -r * e * sv * q, AiryMethod::asymptotic};
}

}  // namespace

AiryValue airy(Complex z) {
  if (std::abs(z) > 40.0) {
    throw NumericalError("airy: |z| > 40 is outside the working range");
  }
  if (std::abs(z) <= 6.0) return airy_series(z);
  if (std::abs(std::arg(z)) <= 2.0 * kPi / 3.0) return airy_asymptotic_direct(z);
  // Near the negative real axis: Ai(z) = -j Ai(jz) - j^2 Ai(j^2 z),
  // j = exp(2 pi i / 3); both rotated arguments land within |arg| <= 2 pi / 3.
  const Complex j = std::polar(1.0, 2.0 * kPi / 3.0);
  const Complex j2 = std::polar(1.0, -2.0 * kPi / 3.0);  // j^2 = conj(j)
  const AiryValue a1 = airy_asymptotic_direct(j * z);
  const AiryValue a2 = airy_asymptotic_direct(j2 * z);
  AiryValue out;
  out.z = z;
  out.ai = -j * a1.ai - j2 * a2.ai;
  out.ai_prime = -j2 * a1.ai_prime - j * a2.ai_prime;
  out.method = AiryMethod::asymptotic;
  return out;
}

double airy_zero(AiryKind kind, int s) {
  if (s < 1) throw std::domain_error("airy_zero: requires s >= 1");
  // Label in the |q| spectrum: a_s <-> lambda_{2s-1}, a'_s <-> lambda_{2s-2}.
  const int k = (kind == AiryKind::Ai) ? 2 * s - 1 : 2 * s - 2;
  auto bs = [](double kk) {  // Bohr-Sommerfeld estimate, N = 1
    return std::pow(0.75 * kPi * (kk + 0.5), 2.0 / 3.0);
  };
  auto f = [kind](double x) {
    const AiryValue v = airy(Complex(-x, 0.0));
    return (kind == AiryKind::Ai) ? v.ai.real() : v.ai_prime.real();
  };
  double lo = (k == 0) ? 0.2 : bs(k - 1.0);
  double hi = bs(k + 1.0);
  double flo = f(lo), fhi = f(hi);
  // The estimates interlace eventually; nudge the bracket if they do not yet.
  for (int tries = 0; (flo * fhi > 0.0) && tries < 8; ++tries) {
    lo *= 0.8;
    hi *= 1.1;
    flo = f(lo);
    fhi = f(hi);
  }
  if (flo * fhi > 0.0) {
    throw BracketError("airy_zero: bracket does not straddle a sign change",
                       lo, hi);
  }
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (flo * fm <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace specdet
