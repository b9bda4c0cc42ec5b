#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "etf/field.hpp"

namespace etf {

/// A (2,k,v)-Steiner system: v points, blocks of k points, every pair of
/// distinct points covered by exactly one block. Blocks are sorted k-tuples
/// of point indices and the block list itself is sorted lexicographically,
/// so equal systems compare equal.
struct SteinerSystem {
  long v = 0;
  long k = 0;
  std::vector<std::vector<int>> blocks;
  std::string label;  // human-readable construction tag, e.g. "pair(v=4)"

  long b() const { return static_cast<long>(blocks.size()); }
  /// Replication number (v-1)/(k-1).
  long r() const { return (v - 1) / (k - 1); }

  /// Order-independent canonical hash (FNV-1a over v, k and sorted blocks).
  std::uint64_t canonical_hash() const;
};

/// b x v transpose of the point/block incidence matrix, stored sparsely:
/// row i lists the points of block i.
struct IncidenceMatrixT {
  long rows = 0;  // b
  long cols = 0;  // v
  std::vector<std::vector<int>> row_points;
};

struct DesignCheck {
  bool pass = false;
  bool size_ok = false;        // b and r match the closed forms
  bool row_counts_ok = false;  // every block has k distinct in-range points
  bool col_counts_ok = false;  // every point lies in exactly r blocks
  bool pair_once_ok = false;   // lambda = 1: every pair covered exactly once
  bool identities_ok = false;  // vr = bk and r(k-1) = v-1
  std::string detail;          // first counterexample, empty when pass
};

/// All 2-element subsets of [0, v); the (2,2,v) system.
SteinerSystem pair_design(long v);

/// Steiner triple system on v points, v = 1 or 3 (mod 6). Uses the Bose
/// construction (v = 6t+3, idempotent commutative quasigroup on Z_{2t+1})
/// and the Skolem construction (v = 6t+1, half-idempotent commutative
/// quasigroup on Z_{2t} plus an infinity point).
SteinerSystem steiner_triple(long v);

/// Lines of the affine geometry AG(n, q): a (2, q, q^n) system.
SteinerSystem affine_lines(const PrimePower& q, int n);

/// Lines of the projective geometry PG(n, q): a (2, q+1, (q^{n+1}-1)/(q-1))
/// system. Points are homogeneous coordinate vectors normalized so the first
/// nonzero coordinate is 1, enumerated lexicographically.
SteinerSystem projective_lines(const PrimePower& q, int n);

/// Hermitian unital in PG(2, q^2): points of the curve
/// x0^{q+1} + x1^{q+1} + x2^{q+1} = 0, blocks cut out by secant lines;
/// a (2, q+1, q^3+1) system.
SteinerSystem hermitian_unital(const PrimePower& q);

/// Checks the four incidence facts plus the parameter identities.
/// Never throws; failures land in the report.
DesignCheck verify_design(const SteinerSystem& s);

/// Requires verify_design to pass (InvalidDesign otherwise).
IncidenceMatrixT incidence_transpose(const SteinerSystem& s);

}  // namespace etf
