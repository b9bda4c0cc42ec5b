#include "etf/jacobi.hpp"

#include <algorithm>
#include <cmath>

#include "etf/error.hpp"

namespace etf {

namespace {

double offdiag_norm(const std::vector<Complex>& a, int n) {
  double s = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) s += std::norm(a[static_cast<std::size_t>(i) * n + j]);
    }
  }
  return std::sqrt(s);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(std::vector<Complex> a, int n) {
  if (n == 0) return {};
  if (static_cast<std::size_t>(n) * n != a.size()) fail(Errc::dimension_mismatch, "jacobi: not square");
  auto at = [&a, n](int i, int j) -> Complex& { return a[static_cast<std::size_t>(i) * n + j]; };

  // Symmetrize; verification inputs are Hermitian up to rounding.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (at(i, j) + std::conj(at(j, i)));
      at(i, j) = avg;
      at(j, i) = std::conj(avg);
    }
    at(i, i) = Complex{at(i, i).real(), 0.0};
  }

  double scale = 0;
  for (const auto& z : a) scale = std::max(scale, std::abs(z));
  if (scale == 0) return std::vector<double>(static_cast<std::size_t>(n), 0.0);
  const double target = 1e-12 * scale * n;

  for (int sweep = 0; sweep < 60; ++sweep) {
    if (offdiag_norm(a, n) <= target) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = at(p, q);
        const double b = std::abs(apq);
        if (b <= 1e-300) continue;
        const Complex u = apq / b;
        const double alpha = at(p, p).real();
        const double beta = at(q, q).real();
        // Real Jacobi angle for [[alpha, b], [b, beta]].
        const double tau = (beta - alpha) / (2.0 * b);
        const double t = (tau >= 0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Unitary U embedding [[c*u, -s*u], [s, c]] at rows/cols (p, q):
        // update A <- U* A U.
        for (int i = 0; i < n; ++i) {
          const Complex rp = at(p, i), rq = at(q, i);
          at(p, i) = c * std::conj(u) * rp + s * rq;
          at(q, i) = -s * std::conj(u) * rp + c * rq;
        }
        for (int i = 0; i < n; ++i) {
          const Complex cp = at(i, p), cq = at(i, q);
          at(i, p) = cp * (c * u) + cq * s;
          at(i, q) = cp * (-s * u) + cq * c;
        }
        at(p, q) = Complex{0, 0};
        at(q, p) = Complex{0, 0};
      }
    }
  }

  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = at(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::vector<double> hermitian_eigenvalues(const FrameMatrix& a) {
  if (a.rows != a.cols) fail(Errc::dimension_mismatch, "jacobi: not square");
  return hermitian_eigenvalues(a.data, a.rows);
}

}  // namespace etf
