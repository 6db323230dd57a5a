#include "specdet/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "specdet/errors.hpp"
#include "specdet/special.hpp"

namespace specdet {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Semiclassical levels of one parity sector are C2 (m + a)^{1/mu},
// m = 0, 1, 2, ...  with a = 1/4 (even labels) or 3/4 (odd labels).
struct SectorScale {
  double c2;  // (4 pi / b0)^{1/mu}
  double a;
  double mu;
};

SectorScale sector_scale(int degree, Parity parity) {
  const DynamicalConstants c = dynamical_constants(degree);
  SectorScale s;
  s.mu = c.mu;
  s.c2 = std::pow(4.0 * kPi / c.b0, 1.0 / c.mu);
  s.a = (parity == Parity::even) ? 0.25 : 0.75;
  return s;
}

// First index m0 such that label off + 2*m0 >= from_label.
int tail_start_index(Parity parity, int from_label) {
  const int off = parity_offset(parity);
  int m0 = (from_label - off + 1) / 2;
  return std::max(m0, 0);
}

}  // namespace

double ParitySpectrum::level(int label) const {
  const int off = parity_offset(parity);
  if (label < off || (label - off) % 2 != 0) {
    throw std::domain_error("ParitySpectrum::level: label parity mismatch");
  }
  const int idx = (label - off) / 2;
  if (label < cutoff && idx < count()) return levels[idx];
  return semiclassical_level(degree, label);
}

double semiclassical_level(int degree, int k) {
  if (k < 0) throw std::domain_error("semiclassical_level: k >= 0");
  const DynamicalConstants c = dynamical_constants(degree);
  return std::pow(2.0 * kPi * (k + 0.5) / c.b0, 1.0 / c.mu);
}

double subtended_angle(double lambda, double level, double phi) {
  return std::atan2(lambda * std::sin(phi), level - lambda * std::cos(phi));
}

double semiclassical_zeta(int degree, Parity parity, double s) {
  const SectorScale sc = sector_scale(degree, parity);
  if (std::abs(s - sc.mu) < 1e-12) {
    throw NumericalError("semiclassical_zeta: pole at s = mu");
  }
  return std::pow(sc.c2, -s) * hurwitz_zeta(s / sc.mu, sc.a);
}

double semiclassical_zeta_tail(int degree, Parity parity, double s,
                               int from_label) {
  const SectorScale sc = sector_scale(degree, parity);
  const int m0 = tail_start_index(parity, from_label);
  return std::pow(sc.c2, -s) * hurwitz_zeta(s / sc.mu, sc.a + m0);
}

double semiclassical_zeta_prime0(int degree, Parity parity) {
  const SectorScale sc = sector_scale(degree, parity);
  // Z(s) = c2^{-s} zeta_H(s/mu, a):  Z'(0) = -log(c2) (1/2 - a) + zeta_H'(0,a)/mu
  return -std::log(sc.c2) * (0.5 - sc.a) + hurwitz_zeta_deriv0(sc.a) / sc.mu;
}

namespace {

// The solved window drifts off the semiclassical grid by a relative
// O((m+a)^-2); fit that coefficient on the upper half of the window so the
// pinned region beyond the cutoff can carry the same drift.
double fit_tail_drift(const ParitySpectrum& spec) {
  const int n = spec.count();
  if (n < 16) return 0.0;
  const SectorScale sc = sector_scale(spec.degree, spec.parity);
  std::vector<double> c;
  c.reserve(n - n / 2);
  for (int i = n / 2; i < n; ++i) {
    const double bs = semiclassical_level(spec.degree, spec.label_of(i));
    const double ma = i + sc.a;
    c.push_back((spec.levels[i] / bs - 1.0) * ma * ma);
  }
  std::nth_element(c.begin(), c.begin() + c.size() / 2, c.end());
  return c[c.size() / 2];
}

// Drifted continuation of the semiclassical level past the window.
double drifted_level(const SectorScale& sc, int degree, int label, int off,
                     double drift) {
  const double lv = semiclassical_level(degree, label);
  const double ma = (label - off) / 2 + sc.a;
  return lv * (1.0 + drift / (ma * ma));
}

// sum_{m >= m_min} sin(m phi) lambda^m / m * T_m, T_m the semiclassical
// inverse-power tails from `from_label`, plus the first-order effect of the
// fitted drift on those tails.  Requires lambda below the first tail level.
double angle_tail(const ParitySpectrum& spec, double lambda, double phi,
                  int from_label, int m_min, double drift) {
  if (lambda == 0.0) return 0.0;
  const double edge = semiclassical_level(spec.degree, from_label);
  if (!(lambda < 0.995 * edge)) {
    throw NumericalError(
        "arg_det: summation horizon too small for this lambda");
  }
  const SectorScale sc = sector_scale(spec.degree, spec.parity);
  const int m0 = tail_start_index(spec.parity, from_label);
  const double r = lambda / sc.c2;
  double acc = 0.0;
  double p = std::pow(r, m_min - 1);
  for (int m = m_min; m <= 400; ++m) {
    p *= r;
    double zh = hurwitz_zeta(double(m) / sc.mu, sc.a + m0);
    if (drift != 0.0) {
      zh -= m * drift * hurwitz_zeta(double(m) / sc.mu + 2.0, sc.a + m0);
    }
    const double term = std::sin(m * phi) / m * p * zh;
    acc += term;
    if (std::abs(p * zh) < 1e-17 * (1.0 + std::abs(acc)) && m > m_min + 2) {
      return acc;
    }
  }
  throw NumericalError("arg_det: tail series did not converge");
}

}  // namespace

double arg_det(const ParitySpectrum& spec, double lambda) {
  if (lambda < 0.0) throw std::domain_error("arg_det: lambda >= 0");
  if (lambda == 0.0) return 0.0;
  const DynamicalConstants c = dynamical_constants(spec.degree);
  if (spec.degree == 2) return kPi * lambda / 4.0;  // Sigma = lambda/4

  const double phi = c.phi;
  const double sphi = std::sin(phi);
  const int off = parity_offset(spec.parity);
  const int k_buffer_end = 2 * std::max(spec.cutoff, 16);  // explicit BS region
  const SectorScale sc = sector_scale(spec.degree, spec.parity);
  const double drift = fit_tail_drift(spec);

  double ang = 0.0;
  if (spec.degree == 1) {
    // mu > 1: the plain angle sum diverges like lambda sin(phi) Z(1).
    // Rearranged absolutely convergent form:
    //   Arg D = lambda sin(phi) Z(1) + sum_k [phi_k - lambda sin(phi)/lambda_k]
    // with Z(1) the zeta-regularized inverse moment of the same spectrum.
    double z1 = semiclassical_zeta(spec.degree, spec.parity, 1.0);
    for (int i = 0; i < spec.count(); ++i) {
      const int k = spec.label_of(i);
      z1 += 1.0 / spec.levels[i] - 1.0 / semiclassical_level(spec.degree, k);
    }
    ang = lambda * sphi * z1;
    for (int i = 0; i < spec.count(); ++i) {
      ang += subtended_angle(lambda, spec.levels[i], phi) -
             lambda * sphi / spec.levels[i];
    }
    for (int k = spec.cutoff + ((spec.cutoff - off) % 2 + 2) % 2;
         k < k_buffer_end; k += 2) {
      const double lv = drifted_level(sc, spec.degree, k, off, drift);
      const double bs = semiclassical_level(spec.degree, k);
      ang += subtended_angle(lambda, lv, phi) - lambda * sphi / lv;
      // keep Z(1) consistent with the drifted pinned levels
      ang += lambda * sphi * (1.0 / lv - 1.0 / bs);
    }
    if (drift != 0.0) {
      const int m0 = tail_start_index(spec.parity, k_buffer_end);
      ang -= lambda * sphi * drift / sc.c2 *
             hurwitz_zeta(1.0 / sc.mu + 2.0, sc.a + m0);
    }
    ang += angle_tail(spec, lambda, phi, k_buffer_end, 2, drift);
    return ang;
  }

  // mu < 1: plain angle sum plus closed-form semiclassical tail.
  for (int i = 0; i < spec.count(); ++i) {
    ang += subtended_angle(lambda, spec.levels[i], phi);
  }
  for (int k = spec.cutoff + ((spec.cutoff - off) % 2 + 2) % 2;
       k < k_buffer_end; k += 2) {
    ang += subtended_angle(lambda, drifted_level(sc, spec.degree, k, off, drift),
                           phi);
  }
  ang += angle_tail(spec, lambda, phi, k_buffer_end, 1, drift);
  return ang;
}

double sigma(const ParitySpectrum& spec, double lambda) {
  if (spec.degree == 2) return lambda / 4.0;
  return arg_det(spec, lambda) / kPi;
}

namespace {

double quantization_target(const ParitySpectrum& spec, int label) {
  const DynamicalConstants c = dynamical_constants(spec.degree);
  const double sign = (spec.parity == Parity::even) ? 1.0 : -1.0;
  return 0.5 * (label + 0.5 + sign * c.kappa / 2.0);
}

// Bracketed root of sigma(spec, .) = t, starting from `guess`.
double solve_bracketed(const ParitySpectrum& spec, int label, double guess,
                       double rel_tol) {
  const double t = quantization_target(spec, label);
  if (spec.degree == 2) return 4.0 * t;

  double lo = guess, hi = guess;
  double glo = sigma(spec, lo) - t;
  double ghi = glo;
  for (int it = 0; glo > 0.0; ++it) {
    if (it > 200 || lo < 1e-12) {
      throw BracketError("solve_level: no lower bracket", lo, hi);
    }
    lo *= 0.8;
    glo = sigma(spec, lo) - t;
  }
  for (int it = 0; ghi < 0.0; ++it) {
    if (it > 200) throw BracketError("solve_level: no upper bracket", lo, hi);
    hi *= 1.25;
    ghi = sigma(spec, hi) - t;
  }
  if (!(glo <= 0.0 && ghi >= 0.0)) {
    throw BracketError("solve_level: sigma not monotone on bracket", lo, hi);
  }
  // Bisection down to a relative width ~1e-3, secant afterwards.
  while ((hi - lo) > 1e-3 * hi) {
    const double mid = 0.5 * (lo + hi);
    const double gm = sigma(spec, mid) - t;
    if (gm < 0.0) {
      if (gm < glo - 1e-12) {
        throw BracketError("solve_level: sigma not monotone on bracket", lo,
                           hi);
      }
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
      ghi = gm;
    }
  }
  double x0 = lo, g0 = glo, x1 = hi, g1 = ghi;
  for (int it = 0; it < 60; ++it) {
    if (g1 == g0) break;
    const double x2 = x1 - g1 * (x1 - x0) / (g1 - g0);
    const double xc = std::clamp(x2, lo, hi);
    const double g2 = sigma(spec, xc) - t;
    if (g2 < 0.0) {
      lo = xc;
    } else {
      hi = xc;
    }
    x0 = x1;
    g0 = g1;
    x1 = xc;
    g1 = g2;
    if (std::abs(x1 - x0) <= rel_tol * std::abs(x1)) break;
  }
  return x1;
}

}  // namespace

double solve_level(const ParitySpectrum& spec, int label) {
  const int off = parity_offset(spec.parity);
  if (label < off || (label - off) % 2 != 0) {
    throw std::domain_error("solve_level: label parity mismatch");
  }
  const double tol = (spec.tol > 0.0 ? spec.tol : 1e-9) / 10.0;
  return solve_bracketed(spec, label, spec.level(label), tol);
}

std::pair<ParitySpectrum, ConvergenceStats> iterate_spectrum(
    int degree, Parity parity, int cutoff, double eps, IterateOptions opt) {
  if (cutoff < 4) throw std::domain_error("iterate_spectrum: K >= 4");
  if (!(eps > 0.0)) throw std::domain_error("iterate_spectrum: eps > 0");

  ParitySpectrum spec;
  spec.degree = degree;
  spec.parity = parity;
  spec.cutoff = cutoff;
  spec.tol = eps;
  const int off = parity_offset(parity);
  for (int k = off; k < cutoff; k += 2) {
    spec.levels.push_back(semiclassical_level(degree, k));
  }

  ConvergenceStats stats;
  if (degree == 2) {  // closed form: Sigma = lambda/4, levels 2k+1 exactly
    for (int i = 0; i < spec.count(); ++i) {
      spec.levels[i] = 4.0 * quantization_target(spec, spec.label_of(i));
    }
    spec.converged = true;
    return {spec, stats};
  }

  std::vector<double> prev_disp;
  std::vector<double> ratios;
  for (int sweep = 1; sweep <= opt.max_sweeps; ++sweep) {
    std::vector<double> next(spec.levels);
    std::vector<double> disp(spec.count());
    double norm = 0.0;
    for (int i = 0; i < spec.count(); ++i) {
      next[i] = solve_bracketed(spec, spec.label_of(i), spec.levels[i],
                                eps / 10.0);
      disp[i] = next[i] - spec.levels[i];
      norm = std::max(norm, std::abs(disp[i]) / spec.levels[i]);
    }
    stats.iterations = sweep;
    stats.displacement_norms.push_back(norm);
    if (sweep >= 2 && stats.displacement_norms[sweep - 2] > 100.0 * eps) {
      double num = 0.0, den = 0.0;
      for (int i = 0; i < spec.count(); ++i) {
        num += disp[i] * prev_disp[i];
        den += prev_disp[i] * prev_disp[i];
      }
      if (den > 0.0) ratios.push_back(num / den);
    }
    prev_disp = std::move(disp);
    spec.levels = std::move(next);
    if (norm <= eps) {
      spec.converged = true;
      break;
    }
  }
  if (!ratios.empty()) {
    std::vector<double> r(ratios);
    std::nth_element(r.begin(), r.begin() + r.size() / 2, r.end());
    stats.contraction_estimate = r[r.size() / 2];
  }
  return {spec, stats};
}

}  // namespace specdet
