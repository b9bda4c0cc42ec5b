#pragma once

#include <vector>

#include "etf/error.hpp"

namespace etf {

/// Largest field/design order the generators will build.
inline constexpr long kOrderBound = 1L << 20;

bool is_prime(long n);

/// q = p^m with p prime. factor_prime_power rejects anything else.
struct PrimePower {
  long p = 0;
  int m = 0;
  long q = 0;

  static PrimePower make(long p, int m);
  /// Decompose q into p^m; fails with NotPrime when q is not a prime power.
  static PrimePower factor(long q);
};

/// GF(p^m) with elements addressed by index in [0, q): the index is the
/// base-p evaluation of the polynomial coefficient vector (degree < m,
/// lowest degree = least significant digit). Index 0 is zero, index 1 is one.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree m over Z_p, coefficients compared lowest degree first, found by
/// exhaustive trial division. Immutable after construction; all operations
/// are pure and safe to share across threads.
class Field {
 public:
  static Field make(long p, int m);
  static Field make(const PrimePower& pp) { return make(pp.p, pp.m); }

  long q() const { return q_; }
  long p() const { return p_; }
  int m() const { return m_; }
  long zero() const { return 0; }
  long one() const { return 1; }

  long add(long a, long b) const;
  long sub(long a, long b) const;
  long neg(long a) const;
  long mul(long a, long b) const;
  /// Multiplicative inverse; DivisionByZero on 0.
  long inv(long a) const;
  long div(long a, long b) const;
  /// a^e by square and multiply, e >= 0 (a^0 defined as 1).
  long pow(long a, long e) const;

  /// Coefficient vector of length m, lowest degree first.
  std::vector<int> coeffs(long a) const;
  long from_coeffs(const std::vector<int>& c) const;

  /// Modulus coefficients, length m+1, monic.
  const std::vector<int>& modulus() const { return modulus_; }

 private:
  Field(long p, int m);
  void check_element(long a) const;

  long p_;
  int m_;
  long q_;
  std::vector<int> modulus_;
  // x^(m+i) reduced mod the modulus, i in [0, m-1]; row length m.
  std::vector<std::vector<int>> xpow_;
};

}  // namespace etf
