#include "specdet/variational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "specdet/errors.hpp"

namespace specdet {

namespace {

// The raw double sum has severe cancellation for large indices, so the
// terms are accumulated in extended precision after factoring out the
// largest log magnitude.
long double element_sum(int degree, int n1, int n2) {
  const int top1 = n1 / 2, top2 = n2 / 2;
  std::vector<long double> logs;
  std::vector<int> signs;
  logs.reserve(static_cast<size_t>(top1 + 1) * (top2 + 1));
  signs.reserve(logs.capacity());
  const long double half_arg0 = 0.5L * (1 + degree + n1 + n2);
  long double log_max = -1e4900L;
  for (int m1 = 0; m1 <= top1; ++m1) {
    for (int m2 = 0; m2 <= top2; ++m2) {
      long double lg = std::lgamma(half_arg0 - m1 - m2) -
                       std::lgamma(m1 + 1.0L) - std::lgamma(m2 + 1.0L) -
                       std::lgamma(n1 - 2 * m1 + 1.0L) -
                       std::lgamma(n2 - 2 * m2 + 1.0L) -
                       (m1 + m2) * std::log(4.0L);
      logs.push_back(lg);
      signs.push_back((m1 + m2) % 2 == 0 ? 1 : -1);
      log_max = std::max(log_max, lg);
    }
  }
  long double sum = 0.0L, comp = 0.0L;  // Kahan
  for (size_t i = 0; i < logs.size(); ++i) {
    long double term = signs[i] * std::exp(logs[i] - log_max);
    long double y = term - comp;
    long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  const long double log_pref =
      0.5L * ((n1 + n2) * std::log(2.0L) + std::lgamma(n1 + 1.0L) +
              std::lgamma(n2 + 1.0L) - std::log(3.14159265358979323846L));
  return sum * std::exp(log_max + log_pref);
}

// 20-point Gauss-Legendre rule on [-1, 1], found by Newton iteration on the
// Legendre recurrence.
struct GaussRule {
  double x[20];
  double w[20];
  GaussRule() {
    const int n = 20;
    for (int i = 0; i < n; ++i) {
      double t = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (t * p1 - p0) / (t * t - 1.0);
        const double dt = p1 / dp;
        t -= dt;
        if (std::fabs(dt) < 1e-15) break;
      }
      x[i] = t;
      w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
  }
};

// Nodes and weights of a composite rule on [0, qmax], panel width 1/2.
void half_line_grid(double qmax, std::vector<double>& q,
                    std::vector<double>& w) {
  static const GaussRule rule;
  const int panels = static_cast<int>(std::ceil(2.0 * qmax));
  q.clear();
  w.clear();
  for (int p = 0; p < panels; ++p) {
    const double a = 0.5 * p, h = 0.25;  // half-width of a 1/2-wide panel
    for (int i = 0; i < 20; ++i) {
      q.push_back(a + h * (rule.x[i] + 1.0));
      w.push_back(h * rule.w[i]);
    }
  }
}

// psi_n(q) for n = 0..nmax at one point, by the oscillator recurrence.
void psi_column(double qv, int nmax, std::vector<double>& out) {
  out.resize(nmax + 1);
  out[0] = std::pow(3.14159265358979323846, -0.25) * std::exp(-0.5 * qv * qv);
  if (nmax >= 1) out[1] = std::sqrt(2.0) * qv * out[0];
  for (int n = 1; n < nmax; ++n) {
    out[n + 1] = std::sqrt(2.0 / (n + 1)) * qv * out[n] -
                 std::sqrt(double(n) / (n + 1)) * out[n - 1];
  }
}

void check_indices(int degree, int n1, int n2) {
  if (degree < 1) throw std::domain_error("matrix_element_qn: degree < 1");
  if (n1 < 0 || n2 < 0) throw std::domain_error("matrix_element_qn: n < 0");
  if (n1 + n2 > 360)
    throw NumericalError("matrix_element_qn: index sum too large");
}

}  // namespace

double matrix_element_qn(int degree, int n1, int n2) {
  check_indices(degree, n1, n2);
  if ((n1 + n2) % 2 != 0) return 0.0;
  const int nmax = std::max(n1, n2);
  std::vector<double> q, w, psi;
  half_line_grid(std::sqrt(2.0 * nmax + 1.0) + 12.0, q, w);
  double sum = 0.0, comp = 0.0;  // Kahan
  for (size_t i = 0; i < q.size(); ++i) {
    psi_column(q[i], nmax, psi);
    const double term =
        2.0 * w[i] * psi[n1] * psi[n2] * std::pow(q[i], degree);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

double matrix_element_qn_series(int degree, int n1, int n2) {
  check_indices(degree, n1, n2);
  if ((n1 + n2) % 2 != 0) return 0.0;
  return static_cast<double>(element_sum(degree, n1, n2));
}

SymmetricMatrix build_hamiltonian(int degree, Parity parity, int size) {
  if (size < 10 || size > 80)
    throw std::domain_error("build_hamiltonian: size outside [10, 80]");
  const int off = parity_offset(parity);
  SymmetricMatrix h;
  h.dim = size;
  h.data.assign(static_cast<size_t>(size) * size, 0.0);
  const int nmax = 2 * (size - 1) + off;
  std::vector<double> q, w, psi;
  half_line_grid(std::sqrt(2.0 * nmax + 1.0) + 12.0, q, w);
  // one pass over the quadrature grid fills every pair at once
  for (size_t m = 0; m < q.size(); ++m) {
    psi_column(q[m], nmax, psi);
    const double vq = 2.0 * w[m] * (std::pow(q[m], degree) - q[m] * q[m]);
    for (int i = 0; i < size; ++i) {
      const double pi_v = psi[2 * i + off] * vq;
      for (int j = i; j < size; ++j) h.at(i, j) += pi_v * psi[2 * j + off];
    }
  }
  for (int i = 0; i < size; ++i) {
    // kinetic part: the oscillator Hamiltonian diag(2n+1) minus its own q^2,
    // folded above into the potential difference |q|^N - q^2
    h.at(i, i) += 2 * (2 * i + off) + 1;
    for (int j = i + 1; j < size; ++j) h.at(j, i) = h.at(i, j);
  }
  return h;
}

std::vector<double> jacobi_eigenvalues(SymmetricMatrix a) {
  const int n = a.dim;
  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::fabs(a.at(i, j)));
  if (scale == 0.0) return std::vector<double>(n, 0.0);
  const double tol = 1e-12 * scale;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off = std::max(off, std::fabs(a.at(i, j)));
    if (off <= tol) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a.at(p, q);
        if (std::fabs(apq) <= 0.1 * tol) continue;
        const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a.at(k, p), akq = a.at(k, q);
          a.at(k, p) = c * akp - s * akq;
          a.at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a.at(p, k), aqk = a.at(q, k);
          a.at(p, k) = c * apk - s * aqk;
          a.at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a.at(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

RitzResult ritz_spectrum(int degree, Parity parity,
                         const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::domain_error("ritz_spectrum: no sizes");
  RitzResult r;
  r.degree = degree;
  r.parity = parity;
  r.basis_sizes = sizes;
  std::sort(r.basis_sizes.begin(), r.basis_sizes.end());
  for (int size : r.basis_sizes)
    r.eigenvalues.push_back(jacobi_eigenvalues(build_hamiltonian(degree, parity, size)));
  if (r.basis_sizes.size() >= 2) {
    const auto& a = r.eigenvalues[r.eigenvalues.size() - 2];
    const auto& b = r.eigenvalues.back();
    for (size_t i = 0; i < a.size(); ++i) {
      const double diff = std::fabs(a[i] - b[i]);
      const double mag = std::max(std::fabs(b[i]), 1.0);
      int digits = 16;
      if (diff > 0.0)
        digits = std::max(0, static_cast<int>(std::floor(-std::log10(diff / mag))));
      r.stable_digits.push_back(digits);
    }
  }
  return r;
}

}  // namespace specdet
