#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etf/design.hpp"
#include "etf/flat.hpp"
#include "etf/frame.hpp"
#include "etf/rational.hpp"

namespace etf {

/// How an EtfMatrix was assembled; kept so verification can use the exact
/// unimodular structure and the block-dependency certificate can recover
/// the omitted flat-matrix row.
struct Provenance {
  SteinerSystem system;
  std::vector<FlatMatrix> flats;                  // one per point
  std::vector<std::vector<int>> row_assignment;   // per point, H-row per incidence, block-row ascending
  int omitted_row = 0;                            // -1 when assignments are irregular
};

/// Sparse M x N frame matrix stored as a positive scale sqrt(scale_num /
/// scale_den) times exact unimodular entries. Column n of block j sits at
/// n = j*block_cols + c and holds entries of the j-th flat matrix's column c
/// on the rows where point j meets a block.
struct EtfMatrix {
  int rows = 0;  // M = b
  int cols = 0;  // N = v(r+1)
  long scale_num = 1;
  long scale_den = 1;
  int block_cols = 0;  // r+1; 0 when the matrix has no block structure
  struct Entry {
    int row;
    Phase phase;
  };
  std::vector<std::vector<Entry>> columns;  // per column, sorted by row
  std::optional<Provenance> provenance;

  double scale() const;
  bool all_real() const;
  long nonzeros() const;
  int block_of(int col) const { return block_cols > 0 ? col / block_cols : 0; }
  FrameMatrix dense() const;
};

struct EtfParams {
  long M = 0;
  long N = 0;
  Rational frame_bound;   // N/M
  Rational alpha_sq;      // (N-M)/(M(N-1))
  double alpha = 0.0;
  Rational redundancy;    // N/M
  Rational density;       // nonzeros / (M*N)
  bool density_matches_welch = false;  // density^2 == (N-1)/(M(N-M))
};

/// Builds the Steiner ETF from a verified (2,k,v)-system and flat matrices
/// of order r+1 (either one shared matrix or one per point). Default row
/// assignment gives the one-entries of each incidence column, in increasing
/// block-row order, the rows of H after skipping `omitted_row`.
EtfMatrix assemble_etf(const SteinerSystem& s, const std::vector<FlatMatrix>& flats,
                       const std::vector<std::vector<int>>& row_assignment = {},
                       int omitted_row = 0);

/// Convenience: shared best_flat(r+1, prefer_real) for every point.
EtfMatrix assemble_default(const SteinerSystem& s, bool prefer_real = true);

EtfParams compute_params(const EtfMatrix& f);

/// FF* = (N/M) I within tol (relative to N/M); for real +-1 entries also
/// runs the exact integer check that the unscaled rows satisfy
/// F F^T = k(r+1) I.
TightReport verify_tight(const EtfMatrix& f, double tol = 1e-9);

/// Unit column norms and constant |<f_a, f_b>| = alpha within tol; reports
/// same-block and cross-block pairs separately. For real entries the check
/// is exact: every pair's unscaled inner product must be +-1, and same-block
/// pairs must be exactly -1.
EquiangularReport verify_equiangular(const EtfMatrix& f, double tol = 1e-9, int threads = 1);

/// G = F* F, dense N x N.
FrameMatrix gram(const EtfMatrix& f);

/// Singular values of G = F*F in descending order: the squared singular
/// values of F (eigenvalues of the M x M frame operator FF*) padded with the
/// N - M structural zeros of the rank-M product.
std::vector<double> gram_spectrum(const EtfMatrix& f);

/// Number of gram_spectrum values above `hi`; fails the report when any
/// remaining value exceeds `lo`.
int gram_rank(const EtfMatrix& f, double hi = 0.5, double lo = 1e-8);

/// Naimark complement: an (N-M) x N frame whose rows span the orthogonal
/// complement of the scaled row space, built by deterministic Gram-Schmidt
/// completion against the coordinate basis and rescaled to unit columns.
/// Dense by nature. Requires verify_tight to pass (NotTight otherwise).
FrameMatrix naimark_complement(const EtfMatrix& f, double tol = 1e-9);
FrameMatrix naimark_complement(const FrameMatrix& f, double tol = 1e-9);

/// F* x through the sparse structure (r multiplies per column).
std::vector<Complex> analysis_apply(const EtfMatrix& f, std::span<const Complex> x);

}  // namespace etf
