#include "etf/rip.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "etf/error.hpp"
#include "etf/jacobi.hpp"

namespace etf {

namespace {

void require_unit_columns(const FrameMatrix& f) {
  for (int a = 0; a < f.cols; ++a) {
    double norm = 0;
    for (int i = 0; i < f.rows; ++i) norm += std::norm(f.at(i, a));
    if (std::abs(norm - 1.0) > 1e-6) {
      fail(Errc::bad_argument, "column " + std::to_string(a) + " is not unit norm");
    }
  }
}

}  // namespace

double coherence(const FrameMatrix& f) {
  require_unit_columns(f);
  double best = 0;
  for (int a = 0; a < f.cols; ++a) {
    for (int b = a + 1; b < f.cols; ++b) best = std::max(best, std::abs(column_inner(f, a, b)));
  }
  return best;
}

double coherence(const EtfMatrix& f) { return coherence(f.dense()); }

long gershgorin_K_bound(long m, long n, double delta) {
  if (m < 1 || n <= m) fail(Errc::invalid_dims, "need 1 <= M < N");
  if (!(delta > 0.0 && delta < 1.0)) fail(Errc::invalid_delta, "delta must lie in (0, 1)");
  const double radius = std::sqrt(static_cast<double>(m) * (n - 1) / static_cast<double>(n - m));
  return static_cast<long>(std::floor(1.0 + delta * radius));
}

double coherence_rip_sufficient(const FrameMatrix& f, int k) {
  if (k < 1) fail(Errc::invalid_k, "K must be >= 1");
  if (k == 1) {
    require_unit_columns(f);
    return 0.0;
  }
  return (k - 1) * coherence(f);
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i, watching for overflow against cap.
    const std::uint64_t num = n - k + i;
    if (result > cap / num * i + i) return cap + 1;
    result = result * num / i;
    if (result > cap) return cap + 1;
  }
  return result;
}

std::vector<int> colex_unrank(std::uint64_t rank, int k) {
  std::vector<int> subset(static_cast<std::size_t>(k), 0);
  for (int i = k; i >= 1; --i) {
    // Largest s with C(s, i) <= rank.
    int s = i - 1;
    std::uint64_t c = 0, next;
    while (true) {
      next = binomial_capped(static_cast<std::uint64_t>(s + 1), static_cast<std::uint64_t>(i),
                             UINT64_MAX / 2);
      if (next > rank) break;
      ++s;
      c = next;
    }
    subset[static_cast<std::size_t>(i - 1)] = s;
    rank -= c;
  }
  return subset;
}

bool colex_next(std::vector<int>& subset, int n) {
  const int k = static_cast<int>(subset.size());
  for (int i = 0; i < k; ++i) {
    const int limit = (i + 1 < k) ? subset[static_cast<std::size_t>(i + 1)] : n;
    if (subset[static_cast<std::size_t>(i)] + 1 < limit) {
      ++subset[static_cast<std::size_t>(i)];
      for (int j = 0; j < i; ++j) subset[static_cast<std::size_t>(j)] = j;
      return true;
    }
  }
  return false;
}

namespace {

double subset_delta(const FrameMatrix& f, const std::vector<int>& subset) {
  const int k = static_cast<int>(subset.size());
  std::vector<Complex> g(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      g[static_cast<std::size_t>(a) * k + b] = column_inner(f, subset[static_cast<std::size_t>(a)],
                                                            subset[static_cast<std::size_t>(b)]);
    }
  }
  const auto eig = hermitian_eigenvalues(std::move(g), k);
  return std::max(eig.back() - 1.0, 1.0 - eig.front());
}

struct ScanBest {
  double delta = -1.0;
  std::vector<int> witness;
  std::uint64_t evaluated = 0;

  void consider(double d, const std::vector<int>& subset) {
    ++evaluated;
    if (d > delta + 1e-15 || (std::abs(d - delta) <= 1e-15 && !witness.empty() && subset < witness)) {
      delta = d;
      witness = subset;
    } else if (witness.empty()) {
      delta = d;
      witness = subset;
    }
  }
};

}  // namespace

RipReport ric_on_subsets(const FrameMatrix& f, int k, const std::vector<std::vector<int>>& subsets) {
  require_unit_columns(f);
  ScanBest best;
  for (const auto& s : subsets) best.consider(subset_delta(f, s), s);
  RipReport rep;
  rep.K = k;
  rep.delta_lower = best.delta;
  rep.witness = best.witness;
  rep.method = "subset-list";
  rep.subsets = best.evaluated;
  return rep;
}

RipReport ric_exhaustive(const FrameMatrix& f, int k, const RicOptions& opts) {
  if (k < 1 || k > f.cols) fail(Errc::invalid_k, "K must lie in [1, N]");
  require_unit_columns(f);
  const std::uint64_t total = binomial_capped(static_cast<std::uint64_t>(f.cols),
                                              static_cast<std::uint64_t>(k), opts.budget);
  RipReport rep;
  rep.K = k;

  if (total <= opts.budget) {
    rep.method = "exhaustive";
    const int nthreads = std::max(1, opts.threads);
    std::vector<ScanBest> parts(static_cast<std::size_t>(nthreads));
    auto run_range = [&](int w, std::uint64_t begin, std::uint64_t end) {
      if (begin >= end) return;
      auto subset = colex_unrank(begin, k);
      ScanBest& local = parts[static_cast<std::size_t>(w)];
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        local.consider(subset_delta(f, subset), subset);
        if (opts.early_exit_on_one && local.delta >= 1.0) break;
        if (idx + 1 < end) colex_next(subset, f.cols);
      }
    };
    if (nthreads == 1) {
      run_range(0, 0, total);
    } else {
      std::vector<std::thread> workers;
      const std::uint64_t chunk = (total + nthreads - 1) / nthreads;
      for (int w = 0; w < nthreads; ++w) {
        const std::uint64_t begin = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(w) * chunk);
        const std::uint64_t end = std::min<std::uint64_t>(total, begin + chunk);
        workers.emplace_back(run_range, w, begin, end);
      }
      for (auto& t : workers) t.join();
    }
    ScanBest best;
    for (auto& part : parts) {  // worker order: deterministic merge
      if (part.witness.empty()) continue;
      if (part.delta > best.delta + 1e-15 ||
          (std::abs(part.delta - best.delta) <= 1e-15 &&
           (best.witness.empty() || part.witness < best.witness))) {
        best.delta = part.delta;
        best.witness = part.witness;
      }
      best.evaluated += part.evaluated;
    }
    rep.delta_lower = best.delta;
    if (!opts.early_exit_on_one || best.delta < 1.0) rep.delta_exact = best.delta;
    rep.witness = best.witness;
    rep.subsets = best.evaluated;
    return rep;
  }

  if (!opts.allow_sampling) {
    fail(Errc::budget_exceeded, "subset count exceeds the budget and sampling is disabled");
  }
  rep.method = "sampled";
  rep.seed = opts.seed;
  std::mt19937_64 rng(opts.seed);
  ScanBest best;
  std::vector<int> pool(static_cast<std::size_t>(f.cols));
  for (int i = 0; i < f.cols; ++i) pool[static_cast<std::size_t>(i)] = i;
  for (std::uint64_t s = 0; s < opts.samples; ++s) {
    // Partial Fisher-Yates draw of K distinct columns.
    for (int i = 0; i < k; ++i) {
      std::uniform_int_distribution<int> dist(i, f.cols - 1);
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(dist(rng))]);
    }
    std::vector<int> subset(pool.begin(), pool.begin() + k);
    std::sort(subset.begin(), subset.end());
    best.consider(subset_delta(f, subset), subset);
    if (opts.early_exit_on_one && best.delta >= 1.0) break;
  }
  rep.delta_lower = best.delta;
  rep.witness = best.witness;
  rep.subsets = best.evaluated;
  return rep;
}

RipReport block_dependency_certificate(const EtfMatrix& f) {
  if (!f.provenance || f.block_cols <= 0) {
    fail(Errc::no_provenance, "certificate needs Steiner assembly provenance");
  }
  const auto& prov = *f.provenance;
  const int order = f.block_cols;  // r + 1

  // Columns of the first block.
  std::vector<int> witness(static_cast<std::size_t>(order));
  for (int c = 0; c < order; ++c) witness[static_cast<std::size_t>(c)] = c;

  const double s = f.scale();
  FrameMatrix sub = FrameMatrix::zero(f.rows, order);
  for (int c = 0; c < order; ++c) {
    for (const auto& e : f.columns[static_cast<std::size_t>(c)]) sub.at(e.row, c) = s * e.phase.value();
  }
  const auto eig = hermitian_eigenvalues(gram_dense(sub));
  double sigma_min = std::sqrt(std::max(0.0, eig.front()));

  // Explicit dependency: the omitted flat-matrix row is orthogonal to every
  // used row, so sum_c conj(H[omit][c]) * f_c = 0.
  const auto& h = prov.flats.front();
  const int omit = prov.omitted_row >= 0 ? prov.omitted_row : 0;
  std::vector<Complex> resid(static_cast<std::size_t>(f.rows), Complex{0, 0});
  for (int c = 0; c < order; ++c) {
    const Complex w = std::conj(h.at(omit, c).value());
    for (const auto& e : f.columns[static_cast<std::size_t>(c)]) {
      resid[static_cast<std::size_t>(e.row)] += w * s * e.phase.value();
    }
  }
  double rnorm = 0;
  for (const auto& z : resid) rnorm += std::norm(z);
  rnorm = std::sqrt(rnorm);
  // sigma_min <= ||S w|| / ||w||; the Rayleigh bound resolves far below the
  // sqrt-of-roundoff floor of the eigenvalue route.
  sigma_min = std::min(sigma_min, rnorm / std::sqrt(static_cast<double>(order)));

  RipReport rep;
  rep.K = order;
  rep.delta_lower = 1.0;  // K dependent vectors force delta >= 1
  rep.witness = witness;
  rep.method = "block-certificate";
  rep.subsets = 1;
  rep.sigma_min = sigma_min;
  rep.dependency_residual = rnorm;
  return rep;
}

}  // namespace etf
