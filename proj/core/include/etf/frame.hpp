#pragma once

#include <complex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace etf {

using Complex = std::complex<double>;

/// Dense M x N frame matrix (columns are the frame vectors), row-major.
struct FrameMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Complex> data;

  static FrameMatrix zero(int r, int c) {
    FrameMatrix f;
    f.rows = r;
    f.cols = c;
    f.data.assign(static_cast<std::size_t>(r) * c, Complex{0.0, 0.0});
    return f;
  }

  Complex& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  const Complex& at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

  bool is_real(double tol = 1e-12) const {
    for (const auto& z : data) {
      if (std::abs(z.imag()) > tol) return false;
    }
    return true;
  }
};

struct TightReport {
  bool pass = false;
  double frame_bound = 0.0;  // N/M
  double max_offdiag = 0.0;
  double max_diag_dev = 0.0;
  bool exact_integer_mode = false;  // ran the exact +-1 check on unscaled entries
  bool exact_integer_pass = false;
  std::optional<std::pair<int, int>> first_violation;
};

struct EquiangularReport {
  bool pass = false;
  double alpha = 0.0;  // Welch-bound target sqrt((N-M)/(M(N-1)))
  double max_norm_dev = 0.0;
  double max_dev = 0.0;  // max | |<f_a,f_b>| - alpha |
  double max_same_block_dev = -1.0;
  double max_cross_block_dev = -1.0;
  bool exact_mode = false;  // exact unimodular-sum check on real entries
  bool exact_pass = false;
  bool same_block_sign_ok = true;  // real case: same-block products equal -alpha
  std::optional<std::pair<int, int>> first_violation;
};

/// y = F x, x of length cols.
std::vector<Complex> apply(const FrameMatrix& f, std::span<const Complex> x);
/// y = F* x, x of length rows.
std::vector<Complex> apply_adjoint(const FrameMatrix& f, std::span<const Complex> x);

/// G = F* F, cols x cols.
FrameMatrix gram_dense(const FrameMatrix& f);

/// <f_a, f_b> = f_b* f_a over the columns.
Complex column_inner(const FrameMatrix& f, int a, int b);

TightReport verify_tight(const FrameMatrix& f, double tol = 1e-9);
EquiangularReport verify_equiangular(const FrameMatrix& f, double tol = 1e-9);

}  // namespace etf
