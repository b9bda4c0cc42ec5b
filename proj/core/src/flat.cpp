#include "etf/flat.hpp"

#include "etf/error.hpp"

namespace etf {

FlatMatrix sylvester(int t) {
  if (t < 0) fail(Errc::bad_argument, "sylvester needs t >= 0");
  if (t >= 20 || (1L << t) > kOrderBound) fail(Errc::too_large, "2^t exceeds the configured bound");
  FlatMatrix h;
  h.order = 1 << t;
  h.real = true;
  h.kind = "sylvester(t=" + std::to_string(t) + ")";
  h.entries.assign(static_cast<std::size_t>(h.order) * h.order, Phase::one());
  // entry (i,j) = (-1)^{popcount(i & j)}
  for (int i = 0; i < h.order; ++i) {
    for (int j = 0; j < h.order; ++j) {
      if (__builtin_popcount(static_cast<unsigned>(i & j)) & 1) h.at(i, j) = Phase::minus_one();
    }
  }
  return h;
}

FlatMatrix paley_hadamard(const PrimePower& q) {
  if (q.q % 4 != 3) fail(Errc::inadmissible_q, "Paley I needs a prime power q = 3 (mod 4)");
  const Field f = Field::make(q);
  const long half = (q.q - 1) / 2;
  // Quadratic character: chi(0) = 0, chi(x) = x^((q-1)/2) in {+1, -1}.
  auto chi = [&](long x) -> int {
    if (x == 0) return 0;
    return f.pow(x, half) == f.one() ? 1 : -1;
  };

  const int n = static_cast<int>(q.q) + 1;
  FlatMatrix h;
  h.order = n;
  h.real = true;
  h.kind = "paley(q=" + std::to_string(q.q) + ")";
  h.entries.assign(static_cast<std::size_t>(n) * n, Phase::one());

  // H = I + S with S skew: S[0][x] = 1, S[x][0] = -1, S[x][y] = chi(x - y).
  // Index 0 is the point at infinity, indices 1..q are field elements.
  auto set_sign = [&h](int i, int j, int s) {
    h.at(i, j) = s >= 0 ? Phase::one() : Phase::minus_one();
  };
  for (int i = 1; i < n; ++i) {
    set_sign(i, 0, -1);
    set_sign(0, i, 1);
    for (int j = 1; j < n; ++j) {
      if (i == j) {
        set_sign(i, j, 1);  // identity on the diagonal, chi(0) = 0 off it
      } else {
        set_sign(i, j, chi(f.sub(i - 1, j - 1)));
      }
    }
  }
  set_sign(0, 0, 1);
  return h;
}

FlatMatrix paley_hadamard(long q) { return paley_hadamard(PrimePower::factor(q)); }

FlatMatrix dft_matrix(int n) {
  if (n < 1) fail(Errc::bad_argument, "dft needs n >= 1");
  FlatMatrix h;
  h.order = n;
  h.real = n <= 2;
  h.kind = "dft(n=" + std::to_string(n) + ")";
  h.entries.assign(static_cast<std::size_t>(n) * n, Phase::one());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      h.at(i, j) = Phase::of(-static_cast<std::int64_t>(i) * j, n);
    }
  }
  return h;
}

FlatMatrix kronecker(const FlatMatrix& a, const FlatMatrix& b) {
  FlatMatrix h;
  h.order = a.order * b.order;
  h.real = a.real && b.real;
  h.kind = "kron(" + a.kind + " x " + b.kind + ")";
  h.entries.assign(static_cast<std::size_t>(h.order) * h.order, Phase::one());
  for (int i1 = 0; i1 < a.order; ++i1) {
    for (int i2 = 0; i2 < b.order; ++i2) {
      for (int j1 = 0; j1 < a.order; ++j1) {
        for (int j2 = 0; j2 < b.order; ++j2) {
          h.at(i1 * b.order + i2, j1 * b.order + j2) = a.at(i1, j1).times(b.at(i2, j2));
        }
      }
    }
  }
  return h;
}

namespace {

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

bool paley_order(long n) {
  if (n < 4) return false;
  const long q = n - 1;
  if (q % 4 != 3) return false;
  long p = q;
  for (long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  long rest = q;
  while (rest % p == 0) rest /= p;
  return rest == 1 && is_prime(p);
}

}  // namespace

bool real_hadamard_constructible(long n) {
  if (n == 1 || n == 2) return true;
  if (n % 4 != 0) return false;
  if (is_power_of_two(n)) return true;
  if (paley_order(n)) return true;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0 && real_hadamard_constructible(d) && real_hadamard_constructible(n / d)) return true;
  }
  return false;
}

FlatMatrix best_flat(int n, bool prefer_real) {
  if (n < 1) fail(Errc::bad_argument, "flat order must be >= 1");
  if (!prefer_real) return dft_matrix(n);
  if (n <= 2) return sylvester(n - 1);
  if (is_power_of_two(n)) {
    int t = 0;
    while ((1 << t) < n) ++t;
    return sylvester(t);
  }
  if (paley_order(n)) return paley_hadamard(n - 1);
  // Greedy Kronecker split over the smallest workable divisor.
  if (n % 4 == 0) {
    for (int d = 2; d * d <= n; ++d) {
      if (n % d == 0 && real_hadamard_constructible(d) && real_hadamard_constructible(n / d)) {
        return kronecker(best_flat(d, true), best_flat(n / d, true));
      }
    }
  }
  return dft_matrix(n);  // complex fallback
}

}  // namespace etf
