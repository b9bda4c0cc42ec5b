#pragma once

#include <string>
#include <vector>

#include "etf/field.hpp"
#include "etf/phase.hpp"

namespace etf {

/// Square matrix with unimodular entries and orthogonal rows: a real
/// Hadamard matrix or a complex root-of-unity matrix such as a DFT.
/// Entries are exact roots of unity; row 0 is all ones for every
/// construction in this module.
struct FlatMatrix {
  int order = 0;
  bool real = false;
  std::string kind;
  std::vector<Phase> entries;  // row-major, order x order

  const Phase& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * order + j]; }
  Phase& at(int i, int j) { return entries[static_cast<std::size_t>(i) * order + j]; }
};

/// Real Hadamard matrix of order 2^t by Sylvester doubling; row 0 and
/// column 0 are all +1.
FlatMatrix sylvester(int t);

/// Real Hadamard matrix of order q+1 for a prime power q = 3 (mod 4),
/// built from the quadratic-character conference matrix over GF(q).
FlatMatrix paley_hadamard(const PrimePower& q);
FlatMatrix paley_hadamard(long q);

/// DFT matrix with entries exp(-2*pi*i*jk/n); real only for n <= 2.
FlatMatrix dft_matrix(int n);

/// Kronecker product; real iff both factors are real.
FlatMatrix kronecker(const FlatMatrix& a, const FlatMatrix& b);

/// True when a real Hadamard matrix of order n is reachable via Sylvester,
/// Paley (q = 3 mod 4) or Kronecker products of such factors.
bool real_hadamard_constructible(long n);

/// Best available flat matrix of order n. With prefer_real, tries Sylvester,
/// then Paley, then Kronecker factorizations; otherwise (or when no real
/// construction is known) falls back to the DFT and reports realness
/// accordingly — a complex fallback, not a proof that no real matrix exists.
FlatMatrix best_flat(int n, bool prefer_real = true);

}  // namespace etf
