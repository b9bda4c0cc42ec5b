#include "etf/frame.hpp"

#include <cmath>

#include "etf/error.hpp"

namespace etf {

std::vector<Complex> apply(const FrameMatrix& f, std::span<const Complex> x) {
  if (static_cast<int>(x.size()) != f.cols) fail(Errc::dimension_mismatch, "apply: length != cols");
  std::vector<Complex> y(static_cast<std::size_t>(f.rows), Complex{0, 0});
  for (int i = 0; i < f.rows; ++i) {
    Complex acc{0, 0};
    for (int j = 0; j < f.cols; ++j) acc += f.at(i, j) * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = acc;
  }
  return y;
}

std::vector<Complex> apply_adjoint(const FrameMatrix& f, std::span<const Complex> x) {
  if (static_cast<int>(x.size()) != f.rows) fail(Errc::dimension_mismatch, "apply_adjoint: length != rows");
  std::vector<Complex> y(static_cast<std::size_t>(f.cols), Complex{0, 0});
  for (int j = 0; j < f.cols; ++j) {
    Complex acc{0, 0};
    for (int i = 0; i < f.rows; ++i) acc += std::conj(f.at(i, j)) * x[static_cast<std::size_t>(i)];
    y[static_cast<std::size_t>(j)] = acc;
  }
  return y;
}

FrameMatrix gram_dense(const FrameMatrix& f) {
  FrameMatrix g = FrameMatrix::zero(f.cols, f.cols);
  for (int a = 0; a < f.cols; ++a) {
    for (int b = a; b < f.cols; ++b) {
      Complex acc{0, 0};
      for (int i = 0; i < f.rows; ++i) acc += std::conj(f.at(i, a)) * f.at(i, b);
      g.at(a, b) = acc;
      g.at(b, a) = std::conj(acc);
    }
  }
  return g;
}

Complex column_inner(const FrameMatrix& f, int a, int b) {
  Complex acc{0, 0};
  for (int i = 0; i < f.rows; ++i) acc += std::conj(f.at(i, b)) * f.at(i, a);
  return acc;
}

TightReport verify_tight(const FrameMatrix& f, double tol) {
  if (tol <= 0) fail(Errc::bad_argument, "tolerance must be positive");
  TightReport rep;
  rep.frame_bound = static_cast<double>(f.cols) / f.rows;
  const double budget = tol * rep.frame_bound;
  for (int i = 0; i < f.rows; ++i) {
    for (int j = i; j < f.rows; ++j) {
      Complex acc{0, 0};
      for (int n = 0; n < f.cols; ++n) acc += f.at(i, n) * std::conj(f.at(j, n));
      if (i == j) {
        const double dev = std::abs(acc.real() - rep.frame_bound) + std::abs(acc.imag());
        if (dev > rep.max_diag_dev) rep.max_diag_dev = dev;
        if (dev > budget && !rep.first_violation) rep.first_violation = {i, j};
      } else {
        const double mag = std::abs(acc);
        if (mag > rep.max_offdiag) rep.max_offdiag = mag;
        if (mag > budget && !rep.first_violation) rep.first_violation = {i, j};
      }
    }
  }
  rep.pass = rep.max_offdiag <= budget && rep.max_diag_dev <= budget;
  return rep;
}

EquiangularReport verify_equiangular(const FrameMatrix& f, double tol) {
  if (tol <= 0) fail(Errc::bad_argument, "tolerance must be positive");
  EquiangularReport rep;
  const int m = f.rows, n = f.cols;
  rep.alpha = n > 1 ? std::sqrt(static_cast<double>(n - m) / (static_cast<double>(m) * (n - 1))) : 0.0;
  for (int a = 0; a < n; ++a) {
    const double norm_dev = std::abs(std::abs(column_inner(f, a, a)) - 1.0);
    if (norm_dev > rep.max_norm_dev) rep.max_norm_dev = norm_dev;
    if (norm_dev > tol && !rep.first_violation) rep.first_violation = {a, a};
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const double dev = std::abs(std::abs(column_inner(f, a, b)) - rep.alpha);
      if (dev > rep.max_dev) rep.max_dev = dev;
      if (dev > tol && !rep.first_violation) rep.first_violation = {a, b};
    }
  }
  rep.pass = rep.max_norm_dev <= tol && rep.max_dev <= tol;
  return rep;
}

}  // namespace etf
