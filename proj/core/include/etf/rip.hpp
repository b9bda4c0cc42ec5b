#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etf/etf.hpp"
#include "etf/frame.hpp"

namespace etf {

struct RipReport {
  int K = 0;
  double delta_lower = 0.0;
  std::optional<double> delta_exact;  // set only after exhaustive enumeration
  std::vector<int> witness;           // K distinct column indices hitting the max
  std::string method;                 // "exhaustive", "sampled" or "block-certificate"
  std::uint64_t subsets = 0;
  std::optional<std::uint64_t> seed;  // sampling seed, when sampled
  double sigma_min = -1.0;            // block certificate: smallest singular value
  double dependency_residual = -1.0;  // block certificate: ||sum of weighted columns||
};

/// Worst-case coherence max_{a != b} |<f_a, f_b>|; requires unit-norm
/// columns (within 1e-6).
double coherence(const FrameMatrix& f);
double coherence(const EtfMatrix& f);

/// Largest K for which the Gershgorin/worst-case-coherence argument yields
/// (K, delta)-RIP: floor(1 + delta * sqrt(M(N-1)/(N-M))), 0 < delta < 1.
long gershgorin_K_bound(long m, long n, double delta);

/// (K-1) * coherence: the sufficient delta from the Gershgorin estimate.
double coherence_rip_sufficient(const FrameMatrix& f, int k);

struct RicOptions {
  std::uint64_t budget = 2'000'000;  // max subsets for exhaustive enumeration
  bool allow_sampling = true;        // fall back to seeded sampling over budget
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 0x5EEDULL;
  bool early_exit_on_one = false;  // stop once delta >= 1 is witnessed
  int threads = 1;
};

/// delta_K = max over K-subsets of max(lambda_max - 1, 1 - lambda_min) of the
/// subset Gram, by colexicographic enumeration (exact when the subset count
/// fits the budget, a sampled lower bound otherwise). Ties resolve to the
/// lexicographically smallest witness, independent of thread count.
RipReport ric_exhaustive(const FrameMatrix& f, int k, const RicOptions& opts = {});

/// Evaluates delta over an explicit list of subsets (lower bound).
RipReport ric_on_subsets(const FrameMatrix& f, int k, const std::vector<std::vector<int>>& subsets);

/// Certificate that the r+1 columns of the first block are linearly
/// dependent: checks sigma_min of the M x (r+1) submatrix and the explicit
/// dependency with weights conj(H[omitted_row][c]). Requires provenance.
RipReport block_dependency_certificate(const EtfMatrix& f);

/// Colexicographic K-subset enumeration helpers (exposed for tests and
/// deterministic partitioning).
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap);
std::vector<int> colex_unrank(std::uint64_t rank, int k);
bool colex_next(std::vector<int>& subset, int n);

}  // namespace etf
