#pragma once

// Test-only reference implementations, deliberately independent of the
// library's computation paths: eigenvalue extremes via the characteristic
// polynomial, a sieve for real-Hadamard-constructible orders, and dense
// reference operators.

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <vector>

#include "etf/frame.hpp"

namespace oracles {

/// Characteristic polynomial coefficients by Faddeev-LeVerrier:
/// p(x) = x^n + c[1] x^{n-1} + ... + c[n]. Hermitian input -> real c.
inline std::vector<double> charpoly(const etf::FrameMatrix& a) {
  const int n = a.rows;
  std::vector<std::complex<double>> m(a.data);
  std::vector<std::complex<double>> work(m.size());
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  c[0] = 1.0;
  std::vector<std::complex<double>> b = m;  // B_1 = A
  for (int k = 1; k <= n; ++k) {
    std::complex<double> tr{0, 0};
    for (int i = 0; i < n; ++i) tr += b[static_cast<std::size_t>(i) * n + i];
    const double ck = -tr.real() / k;
    c[static_cast<std::size_t>(k)] = ck;
    if (k == n) break;
    // B_{k+1} = A (B_k + c_k I)
    auto shifted = b;
    for (int i = 0; i < n; ++i) shifted[static_cast<std::size_t>(i) * n + i] += ck;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::complex<double> acc{0, 0};
        for (int t = 0; t < n; ++t) {
          acc += m[static_cast<std::size_t>(i) * n + t] * shifted[static_cast<std::size_t>(t) * n + j];
        }
        work[static_cast<std::size_t>(i) * n + j] = acc;
      }
    }
    b = work;
  }
  return c;
}

inline double poly_eval(const std::vector<double>& c, double x) {
  double y = 0;
  for (double ci : c) y = y * x + ci;
  return y;
}

inline std::vector<double> poly_derivative(const std::vector<double>& c) {
  const int deg = static_cast<int>(c.size()) - 1;
  std::vector<double> d(static_cast<std::size_t>(deg));
  for (int i = 0; i < deg; ++i) d[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] * (deg - i);
  return d;
}

inline double bisect_root(const std::vector<double>& c, double lo, double hi) {
  double flo = poly_eval(c, lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = poly_eval(c, mid);
    if ((flo <= 0 && fmid <= 0) || (flo >= 0 && fmid >= 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// All real roots of a real-rooted polynomial on [lo, hi] via the
/// derivative chain: critical points isolate the roots; roots sitting at
/// critical points (multiplicities) are accepted by residual size.
inline std::vector<double> real_roots(const std::vector<double>& c, double lo, double hi) {
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg <= 0) return {};
  if (deg == 1) return {-c[1] / c[0]};
  const auto crit = real_roots(poly_derivative(c), lo, hi);
  std::vector<double> cut = {lo};
  cut.insert(cut.end(), crit.begin(), crit.end());
  cut.push_back(hi);
  std::sort(cut.begin(), cut.end());

  double scale = 0;
  for (double ci : c) scale = std::max(scale, std::abs(ci));
  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < cut.size(); ++i) {
    const double a = cut[i], b = cut[i + 1];
    const double fa = poly_eval(c, a), fb = poly_eval(c, b);
    if ((fa <= 0 && fb >= 0) || (fa >= 0 && fb <= 0)) {
      roots.push_back(bisect_root(c, a, b));
    }
  }
  for (double t : crit) {  // repeated roots touch zero at critical points
    if (std::abs(poly_eval(c, t)) <= 1e-9 * std::max(1.0, scale)) {
      bool close = false;
      for (double r : roots) close = close || std::abs(r - t) < 1e-7;
      if (!close) roots.push_back(t);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

struct Extremes {
  double min = 0;
  double max = 0;
};

/// Smallest/largest eigenvalue of a Hermitian matrix via the characteristic
/// polynomial, bracketed by Gershgorin disks.
inline Extremes charpoly_extremes(const etf::FrameMatrix& a) {
  const int n = a.rows;
  double lo = 1e300, hi = -1e300;
  for (int i = 0; i < n; ++i) {
    double radius = 0;
    for (int j = 0; j < n; ++j) {
      if (j != i) radius += std::abs(a.at(i, j));
    }
    lo = std::min(lo, a.at(i, i).real() - radius);
    hi = std::max(hi, a.at(i, i).real() + radius);
  }
  lo -= 1e-6;
  hi += 1e-6;
  const auto roots = real_roots(charpoly(a), lo, hi);
  return {roots.front(), roots.back()};
}

/// Orders <= limit for which a real Hadamard matrix is reachable from
/// Sylvester doubling, Paley I (q = 3 mod 4) and Kronecker products;
/// written as an independent sieve.
inline std::set<long> real_hadamard_orders(long limit) {
  auto prime = [](long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  };
  std::set<long> base = {1, 2};
  for (long n = 4; n <= limit; n *= 2) base.insert(n);
  for (long q = 3; q + 1 <= limit; ++q) {
    if (q % 4 != 3) continue;
    long p = q;
    for (long d = 2; d * d <= q; ++d) {
      if (q % d == 0) {
        p = d;
        break;
      }
    }
    long rest = q;
    while (rest % p == 0) rest /= p;
    if (rest == 1 && prime(p)) base.insert(q + 1);
  }
  // Closure under products.
  std::set<long> closed = base;
  bool grew = true;
  while (grew) {
    grew = false;
    for (long a : closed) {
      for (long b : closed) {
        if (a > limit / b) continue;
        if (closed.insert(a * b).second) grew = true;
      }
    }
  }
  return closed;
}

/// Dense F* x with no shortcuts.
inline std::vector<etf::Complex> dense_adjoint_apply(const etf::FrameMatrix& f,
                                                     const std::vector<etf::Complex>& x) {
  std::vector<etf::Complex> y(static_cast<std::size_t>(f.cols), {0, 0});
  for (int j = 0; j < f.cols; ++j) {
    etf::Complex acc{0, 0};
    for (int i = 0; i < f.rows; ++i) acc += std::conj(f.at(i, j)) * x[static_cast<std::size_t>(i)];
    y[static_cast<std::size_t>(j)] = acc;
  }
  return y;
}

}  // namespace oracles
