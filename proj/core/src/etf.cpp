#include "etf/etf.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "etf/error.hpp"
#include "etf/jacobi.hpp"

namespace etf {

double EtfMatrix::scale() const {
  return std::sqrt(static_cast<double>(scale_num) / static_cast<double>(scale_den));
}

bool EtfMatrix::all_real() const {
  for (const auto& col : columns) {
    for (const auto& e : col) {
      if (!e.phase.is_real()) return false;
    }
  }
  return true;
}

long EtfMatrix::nonzeros() const {
  long n = 0;
  for (const auto& col : columns) n += static_cast<long>(col.size());
  return n;
}

FrameMatrix EtfMatrix::dense() const {
  FrameMatrix f = FrameMatrix::zero(rows, cols);
  const double s = scale();
  for (int n = 0; n < cols; ++n) {
    for (const auto& e : columns[static_cast<std::size_t>(n)]) f.at(e.row, n) = s * e.phase.value();
  }
  return f;
}

EtfMatrix assemble_etf(const SteinerSystem& s, const std::vector<FlatMatrix>& flats,
                       const std::vector<std::vector<int>>& row_assignment, int omitted_row) {
  const auto check = verify_design(s);
  if (!check.pass) fail(Errc::invalid_design, "assembly input: " + check.detail);
  const long v = s.v;
  const long r = s.r();
  const int order = static_cast<int>(r) + 1;

  if (flats.empty() || (flats.size() != 1 && flats.size() != static_cast<std::size_t>(v))) {
    fail(Errc::bad_argument, "need one shared flat matrix or one per point");
  }
  for (const auto& h : flats) {
    if (h.order != order) {
      fail(Errc::order_mismatch, "flat matrix order " + std::to_string(h.order) + ", expected " +
                                     std::to_string(order));
    }
  }
  auto flat_of = [&](long j) -> const FlatMatrix& {
    return flats.size() == 1 ? flats[0] : flats[static_cast<std::size_t>(j)];
  };

  // Blocks containing each point, ascending block-row order.
  std::vector<std::vector<int>> point_blocks(static_cast<std::size_t>(v));
  for (int i = 0; i < static_cast<int>(s.blocks.size()); ++i) {
    for (int p : s.blocks[static_cast<std::size_t>(i)]) point_blocks[static_cast<std::size_t>(p)].push_back(i);
  }

  // Default assignment: the rows of H in order, skipping omitted_row.
  std::vector<std::vector<int>> assign;
  if (row_assignment.empty()) {
    if (omitted_row < 0 || omitted_row >= order) fail(Errc::bad_argument, "omitted row out of range");
    std::vector<int> rows_used;
    for (int i = 0; i < order; ++i) {
      if (i != omitted_row) rows_used.push_back(i);
    }
    assign.assign(static_cast<std::size_t>(v), rows_used);
  } else {
    if (row_assignment.size() != static_cast<std::size_t>(v)) {
      fail(Errc::bad_argument, "row assignment must cover every point");
    }
    assign = row_assignment;
  }
  for (long j = 0; j < v; ++j) {
    auto& a = assign[static_cast<std::size_t>(j)];
    if (static_cast<long>(a.size()) != r) fail(Errc::bad_argument, "assignment length != r");
    std::vector<char> seen(static_cast<std::size_t>(order), 0);
    for (int rowidx : a) {
      if (rowidx < 0 || rowidx >= order) fail(Errc::bad_argument, "assigned row out of range");
      if (seen[static_cast<std::size_t>(rowidx)]) {
        fail(Errc::assignment_collision,
             "point " + std::to_string(j) + " maps two incidences to flat row " + std::to_string(rowidx));
      }
      seen[static_cast<std::size_t>(rowidx)] = 1;
    }
  }

  EtfMatrix f;
  f.rows = static_cast<int>(s.b());
  f.cols = static_cast<int>(v) * order;
  // (k-1)/(v-1) reduces to 1/r.
  const long g = std::gcd(s.k - 1, s.v - 1);
  f.scale_num = (s.k - 1) / g;
  f.scale_den = (s.v - 1) / g;
  f.block_cols = order;
  f.columns.assign(static_cast<std::size_t>(f.cols), {});
  for (long j = 0; j < v; ++j) {
    const auto& h = flat_of(j);
    const auto& blocks_of_j = point_blocks[static_cast<std::size_t>(j)];
    for (int c = 0; c < order; ++c) {
      auto& col = f.columns[static_cast<std::size_t>(j) * order + c];
      col.reserve(blocks_of_j.size());
      for (std::size_t t = 0; t < blocks_of_j.size(); ++t) {
        col.push_back({blocks_of_j[t], h.at(assign[static_cast<std::size_t>(j)][t], c)});
      }
    }
  }

  Provenance prov;
  prov.system = s;
  prov.flats.reserve(static_cast<std::size_t>(v));
  for (long j = 0; j < v; ++j) prov.flats.push_back(flat_of(j));
  prov.row_assignment = assign;
  prov.omitted_row = row_assignment.empty() ? omitted_row : -1;
  f.provenance = std::move(prov);
  return f;
}

EtfMatrix assemble_default(const SteinerSystem& s, bool prefer_real) {
  const int order = static_cast<int>(s.r()) + 1;
  return assemble_etf(s, {best_flat(order, prefer_real)});
}

EtfParams compute_params(const EtfMatrix& f) {
  EtfParams p;
  p.M = f.rows;
  p.N = f.cols;
  p.frame_bound = Rational(p.N, p.M);
  p.redundancy = p.frame_bound;
  if (p.N > 1) {
    p.alpha_sq = Rational(p.N - p.M, p.M * (p.N - 1));
    p.alpha = std::sqrt(p.alpha_sq.to_double());
  }
  p.density = Rational(f.nonzeros(), static_cast<long long>(p.M) * p.N);
  if (p.N > p.M) {
    p.density_matches_welch =
        (p.density * p.density == Rational(p.N - 1, p.M * (p.N - p.M)));
  }
  return p;
}

namespace {

// Sparse rows (col, phase) built from the column store.
std::vector<std::vector<std::pair<int, Phase>>> sparse_rows(const EtfMatrix& f) {
  std::vector<std::vector<std::pair<int, Phase>>> rows(static_cast<std::size_t>(f.rows));
  for (int n = 0; n < f.cols; ++n) {
    for (const auto& e : f.columns[static_cast<std::size_t>(n)]) {
      rows[static_cast<std::size_t>(e.row)].emplace_back(n, e.phase);
    }
  }
  return rows;
}

}  // namespace

TightReport verify_tight(const EtfMatrix& f, double tol) {
  if (tol <= 0) fail(Errc::bad_argument, "tolerance must be positive");
  TightReport rep;
  rep.frame_bound = static_cast<double>(f.cols) / f.rows;
  const double budget = tol * rep.frame_bound;
  const double s2 = static_cast<double>(f.scale_num) / static_cast<double>(f.scale_den);
  const auto rows = sparse_rows(f);

  const bool real_mode = f.all_real();
  rep.exact_integer_mode = real_mode;
  rep.exact_integer_pass = real_mode;

  for (int i = 0; i < f.rows; ++i) {
    for (int j = i; j < f.rows; ++j) {
      // Merge on shared columns.
      const auto& ri = rows[static_cast<std::size_t>(i)];
      const auto& rj = rows[static_cast<std::size_t>(j)];
      Complex acc{0, 0};
      long long iacc = 0;
      std::size_t a = 0, b = 0;
      while (a < ri.size() && b < rj.size()) {
        if (ri[a].first < rj[b].first) {
          ++a;
        } else if (ri[a].first > rj[b].first) {
          ++b;
        } else {
          acc += ri[a].second.value() * std::conj(rj[b].second.value());
          if (real_mode) iacc += ri[a].second.real_sign() * rj[b].second.real_sign();
          ++a;
          ++b;
        }
      }
      acc *= s2;
      if (i == j) {
        const double dev = std::abs(acc.real() - rep.frame_bound) + std::abs(acc.imag());
        if (dev > rep.max_diag_dev) rep.max_diag_dev = dev;
        if (dev > budget && !rep.first_violation) rep.first_violation = {i, j};
        // Unscaled FF^T diagonal must equal N/M / scale^2 exactly:
        // M * scale_num * dot == N * scale_den.
        if (real_mode &&
            static_cast<long long>(f.rows) * f.scale_num * iacc !=
                static_cast<long long>(f.cols) * f.scale_den) {
          rep.exact_integer_pass = false;
          if (!rep.first_violation) rep.first_violation = {i, j};
        }
      } else {
        const double mag = std::abs(acc);
        if (mag > rep.max_offdiag) rep.max_offdiag = mag;
        if (mag > budget && !rep.first_violation) rep.first_violation = {i, j};
        if (real_mode && iacc != 0) {
          rep.exact_integer_pass = false;
          if (!rep.first_violation) rep.first_violation = {i, j};
        }
      }
    }
  }
  rep.pass = rep.max_offdiag <= budget && rep.max_diag_dev <= budget &&
             (!rep.exact_integer_mode || rep.exact_integer_pass);
  return rep;
}

namespace {

struct PairScanResult {
  double max_dev = 0.0;
  double max_same = -1.0;
  double max_cross = -1.0;
  bool exact_pass = true;
  bool sign_ok = true;
  std::optional<std::pair<int, int>> first_violation;
};

// Scan column pairs [begin, end) x (a, cols) for deviations from alpha.
PairScanResult scan_pairs(const EtfMatrix& f, double alpha, double tol, int begin, int end) {
  PairScanResult res;
  const double s2 = static_cast<double>(f.scale_num) / static_cast<double>(f.scale_den);
  const bool real_mode = f.all_real();
  for (int a = begin; a < end; ++a) {
    const auto& ca = f.columns[static_cast<std::size_t>(a)];
    for (int b = a + 1; b < f.cols; ++b) {
      const auto& cb = f.columns[static_cast<std::size_t>(b)];
      Complex acc{0, 0};
      long long iacc = 0;
      std::size_t i = 0, j = 0;
      while (i < ca.size() && j < cb.size()) {
        if (ca[i].row < cb[j].row) {
          ++i;
        } else if (ca[i].row > cb[j].row) {
          ++j;
        } else {
          acc += ca[i].phase.value() * std::conj(cb[j].phase.value());
          if (real_mode) iacc += ca[i].phase.real_sign() * cb[j].phase.real_sign();
          ++i;
          ++j;
        }
      }
      const double mag = s2 * std::abs(acc);
      const double dev = std::abs(mag - alpha);
      const bool same_block = f.block_cols > 0 && f.block_of(a) == f.block_of(b);
      if (dev > res.max_dev) res.max_dev = dev;
      if (same_block) {
        if (dev > res.max_same) res.max_same = dev;
      } else if (dev > res.max_cross) {
        res.max_cross = dev;
      }
      if (dev > tol && !res.first_violation) res.first_violation = {a, b};
      if (real_mode) {
        // Exact: (scale^2 |dot|)^2 == alpha^2 = (N-M)/(M(N-1)) as integers.
        const long long lhs = iacc * iacc * static_cast<long long>(f.scale_num) * f.scale_num *
                              static_cast<long long>(f.rows) * (f.cols - 1);
        const long long rhs = static_cast<long long>(f.cols - f.rows) *
                              static_cast<long long>(f.scale_den) * f.scale_den;
        if (lhs != rhs) {
          res.exact_pass = false;
          if (!res.first_violation) res.first_violation = {a, b};
        }
        if (same_block && iacc != -1) res.sign_ok = false;
      }
    }
  }
  return res;
}

}  // namespace

EquiangularReport verify_equiangular(const EtfMatrix& f, double tol, int threads) {
  if (tol <= 0) fail(Errc::bad_argument, "tolerance must be positive");
  EquiangularReport rep;
  const long m = f.rows, n = f.cols;
  rep.alpha = n > 1 ? std::sqrt(static_cast<double>(n - m) / (static_cast<double>(m) * (n - 1))) : 0.0;
  rep.exact_mode = f.all_real();

  // Column norms: scale^2 * (#entries) must be 1.
  const double s2 = static_cast<double>(f.scale_num) / static_cast<double>(f.scale_den);
  for (int a = 0; a < f.cols; ++a) {
    const double dev = std::abs(s2 * static_cast<double>(f.columns[static_cast<std::size_t>(a)].size()) - 1.0);
    if (dev > rep.max_norm_dev) rep.max_norm_dev = dev;
    if (dev > tol && !rep.first_violation) rep.first_violation = {a, a};
  }

  const int t = std::max(1, threads);
  std::vector<PairScanResult> parts(static_cast<std::size_t>(t));
  if (t == 1) {
    parts[0] = scan_pairs(f, rep.alpha, tol, 0, f.cols);
  } else {
    std::vector<std::thread> workers;
    const int chunk = (f.cols + t - 1) / t;
    for (int w = 0; w < t; ++w) {
      const int begin = std::min(f.cols, w * chunk);
      const int end = std::min(f.cols, begin + chunk);
      workers.emplace_back(
          [&f, &parts, &rep, tol, w, begin, end] { parts[static_cast<std::size_t>(w)] = scan_pairs(f, rep.alpha, tol, begin, end); });
    }
    for (auto& th : workers) th.join();
  }
  rep.exact_pass = rep.exact_mode;
  for (const auto& part : parts) {  // merge in worker order: deterministic
    rep.max_dev = std::max(rep.max_dev, part.max_dev);
    rep.max_same_block_dev = std::max(rep.max_same_block_dev, part.max_same);
    rep.max_cross_block_dev = std::max(rep.max_cross_block_dev, part.max_cross);
    if (rep.exact_mode) {
      rep.exact_pass = rep.exact_pass && part.exact_pass;
      rep.same_block_sign_ok = rep.same_block_sign_ok && part.sign_ok;
    }
    if (!rep.first_violation && part.first_violation) rep.first_violation = part.first_violation;
  }
  rep.pass = rep.max_norm_dev <= tol && rep.max_dev <= tol && (!rep.exact_mode || rep.exact_pass);
  return rep;
}

FrameMatrix gram(const EtfMatrix& f) { return gram_dense(f.dense()); }

std::vector<double> gram_spectrum(const EtfMatrix& f) {
  // FF* is M x M; the nonzero spectrum of F*F equals the spectrum of FF*,
  // and the remaining N - M singular values of the rank-<=M product are 0.
  const double s2 = static_cast<double>(f.scale_num) / static_cast<double>(f.scale_den);
  const auto rows = sparse_rows(f);
  std::vector<Complex> op(static_cast<std::size_t>(f.rows) * f.rows, Complex{0, 0});
  for (int i = 0; i < f.rows; ++i) {
    for (int j = 0; j < f.rows; ++j) {
      const auto& ri = rows[static_cast<std::size_t>(i)];
      const auto& rj = rows[static_cast<std::size_t>(j)];
      Complex acc{0, 0};
      std::size_t a = 0, b = 0;
      while (a < ri.size() && b < rj.size()) {
        if (ri[a].first < rj[b].first) {
          ++a;
        } else if (ri[a].first > rj[b].first) {
          ++b;
        } else {
          acc += ri[a].second.value() * std::conj(rj[b].second.value());
          ++a;
          ++b;
        }
      }
      op[static_cast<std::size_t>(i) * f.rows + j] = s2 * acc;
    }
  }
  auto eig = hermitian_eigenvalues(std::move(op), f.rows);
  std::vector<double> spectrum(eig.rbegin(), eig.rend());
  spectrum.resize(static_cast<std::size_t>(f.cols), 0.0);
  return spectrum;
}

int gram_rank(const EtfMatrix& f, double hi, double lo) {
  const auto spectrum = gram_spectrum(f);
  int rank = 0;
  for (double sv : spectrum) {
    if (sv > hi) {
      ++rank;
    } else if (sv > lo) {
      fail(Errc::invalid_design, "gram spectrum has a value in the ambiguous band");
    }
  }
  return rank;
}

namespace {

FrameMatrix naimark_dense(const FrameMatrix& dense, double tol) {
  const auto tight = verify_tight(dense, tol);
  if (!tight.pass) fail(Errc::not_tight, "Naimark complement needs a tight frame");
  const int m = dense.rows, n = dense.cols;
  if (m >= n) fail(Errc::invalid_dims, "Naimark complement needs M < N");

  const double row_scale = std::sqrt(static_cast<double>(m) / n);
  std::vector<std::vector<Complex>> basis;
  basis.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    std::vector<Complex> row(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = row_scale * dense.at(i, j);
    basis.push_back(std::move(row));
  }

  auto project_out = [&basis, n](std::vector<Complex>& vec) {
    for (const auto& b : basis) {
      Complex ip{0, 0};
      for (int j = 0; j < n; ++j) ip += vec[static_cast<std::size_t>(j)] * std::conj(b[static_cast<std::size_t>(j)]);
      for (int j = 0; j < n; ++j) vec[static_cast<std::size_t>(j)] -= ip * b[static_cast<std::size_t>(j)];
    }
  };

  // Deterministic completion: sweep the coordinate basis in index order,
  // re-orthogonalizing twice for stability.
  FrameMatrix out = FrameMatrix::zero(n - m, n);
  int produced = 0;
  const double col_scale = std::sqrt(static_cast<double>(n) / (n - m));
  for (int e = 0; e < n && produced < n - m; ++e) {
    std::vector<Complex> vec(static_cast<std::size_t>(n), Complex{0, 0});
    vec[static_cast<std::size_t>(e)] = Complex{1, 0};
    project_out(vec);
    project_out(vec);
    double norm = 0;
    for (const auto& z : vec) norm += std::norm(z);
    norm = std::sqrt(norm);
    if (norm < 1e-8) continue;
    for (auto& z : vec) z /= norm;
    for (int j = 0; j < n; ++j) out.at(produced, j) = col_scale * vec[static_cast<std::size_t>(j)];
    basis.push_back(std::move(vec));
    ++produced;
  }
  if (produced != n - m) fail(Errc::invalid_dims, "orthonormal completion came up short");
  return out;
}

}  // namespace

FrameMatrix naimark_complement(const FrameMatrix& f, double tol) { return naimark_dense(f, tol); }

FrameMatrix naimark_complement(const EtfMatrix& f, double tol) {
  const auto tight = verify_tight(f, tol);
  if (!tight.pass) fail(Errc::not_tight, "Naimark complement needs a tight frame");
  return naimark_dense(f.dense(), tol);
}

std::vector<Complex> analysis_apply(const EtfMatrix& f, std::span<const Complex> x) {
  if (static_cast<int>(x.size()) != f.rows) fail(Errc::dimension_mismatch, "analysis_apply: length != M");
  const double s = f.scale();
  // Root-of-unity values cached per denominator; one trig call per root
  // instead of one per entry.
  std::vector<std::vector<Complex>> roots;
  auto value_of = [&roots](const Phase& p) -> Complex {
    if (static_cast<std::size_t>(p.den) >= roots.size()) roots.resize(static_cast<std::size_t>(p.den) + 1);
    auto& table = roots[static_cast<std::size_t>(p.den)];
    if (table.empty()) {
      table.resize(static_cast<std::size_t>(p.den));
      for (std::int64_t i = 0; i < p.den; ++i) table[static_cast<std::size_t>(i)] = Phase::of(i, p.den).value();
    }
    return table[static_cast<std::size_t>(p.num)];
  };
  std::vector<Complex> y(static_cast<std::size_t>(f.cols), Complex{0, 0});
  for (int n = 0; n < f.cols; ++n) {
    Complex acc{0, 0};
    for (const auto& e : f.columns[static_cast<std::size_t>(n)]) {
      acc += std::conj(value_of(e.phase)) * x[static_cast<std::size_t>(e.row)];
    }
    y[static_cast<std::size_t>(n)] = s * acc;
  }
  return y;
}

}  // namespace etf
