#include "etf/field.hpp"

#include <algorithm>
#include <string>

namespace etf {

namespace {

// Remainder of a mod b over Z_p; coefficient vectors lowest degree first,
// possibly with trailing zeros.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, long p) {
  auto degree = [](const std::vector<int>& f) {
    int d = static_cast<int>(f.size()) - 1;
    while (d >= 0 && f[d] == 0) --d;
    return d;
  };
  const int db = degree(b);
  int da = degree(a);
  // b monic by construction.
  while (da >= db && db >= 0) {
    const int lead = a[da];
    if (lead != 0) {
      for (int i = 0; i <= db; ++i) {
        a[da - db + i] = static_cast<int>(((a[da - db + i] - static_cast<long>(lead) * b[i]) % p + p) % p);
      }
    }
    --da;
  }
  return a;
}

bool poly_is_zero(const std::vector<int>& f) {
  return std::all_of(f.begin(), f.end(), [](int c) { return c == 0; });
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits
// of `code`.
std::vector<int> monic_from_code(long code, int d, long p) {
  std::vector<int> f(d + 1, 0);
  for (int i = 0; i < d; ++i) {
    f[i] = static_cast<int>(code % p);
    code /= p;
  }
  f[d] = 1;
  return f;
}

bool is_irreducible(const std::vector<int>& f, int m, long p) {
  // Trial division by every monic polynomial of degree 1..m/2.
  for (int d = 1; 2 * d <= m; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      if (poly_is_zero(poly_mod(f, monic_from_code(code, d, p), p))) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimePower PrimePower::make(long p, int m) {
  if (!is_prime(p)) fail(Errc::not_prime, std::to_string(p) + " is not prime");
  if (m < 1) fail(Errc::bad_argument, "exponent must be >= 1");
  long q = 1;
  for (int i = 0; i < m; ++i) {
    if (q > kOrderBound / p) fail(Errc::too_large, "p^m exceeds the configured bound");
    q *= p;
  }
  return {p, m, q};
}

PrimePower PrimePower::factor(long q) {
  if (q < 2) fail(Errc::not_prime, std::to_string(q) + " is not a prime power");
  long p = q;
  for (long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  int m = 0;
  long rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) fail(Errc::not_prime, std::to_string(q) + " is not a prime power");
  return make(p, m);
}

Field Field::make(long p, int m) { return Field(PrimePower::make(p, m).p, m); }

Field::Field(long p, int m) : p_(p), m_(m) {
  q_ = 1;
  for (int i = 0; i < m_; ++i) q_ *= p_;

  long count = 1;
  for (int i = 0; i < m_; ++i) count *= p_;
  modulus_.clear();
  for (long code = 0; code < count; ++code) {
    auto f = monic_from_code(code, m_, p_);
    if (is_irreducible(f, m_, p_)) {
      modulus_ = f;
      break;
    }
  }
  if (modulus_.empty()) fail(Errc::bad_argument, "no irreducible modulus found");

  // x^m = -(low part of modulus); higher powers by repeated shift-reduce.
  xpow_.assign(m_, std::vector<int>(m_, 0));
  for (int i = 0; i < m_; ++i) xpow_[0][i] = static_cast<int>((p_ - modulus_[i]) % p_);
  for (int e = 1; e < m_; ++e) {
    std::vector<int> shifted(m_ + 1, 0);
    for (int i = 0; i < m_; ++i) shifted[i + 1] = xpow_[e - 1][i];
    const int top = shifted[m_];
    for (int i = 0; i < m_; ++i) {
      xpow_[e][i] = static_cast<int>((shifted[i] + static_cast<long>(top) * xpow_[0][i]) % p_);
    }
  }
}

void Field::check_element(long a) const {
  if (a < 0 || a >= q_) fail(Errc::field_mismatch, "element index out of range");
}

std::vector<int> Field::coeffs(long a) const {
  check_element(a);
  std::vector<int> c(m_, 0);
  for (int i = 0; i < m_; ++i) {
    c[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return c;
}

long Field::from_coeffs(const std::vector<int>& c) const {
  long a = 0;
  for (int i = std::min<int>(m_, static_cast<int>(c.size())) - 1; i >= 0; --i) {
    a = a * p_ + ((c[i] % p_ + p_) % p_);
  }
  return a;
}

long Field::add(long a, long b) const {
  check_element(a);
  check_element(b);
  long out = 0, base = 1;
  for (int i = 0; i < m_; ++i) {
    out += base * ((a % p_ + b % p_) % p_);
    a /= p_;
    b /= p_;
    base *= p_;
  }
  return out;
}

long Field::neg(long a) const {
  check_element(a);
  long out = 0, base = 1;
  for (int i = 0; i < m_; ++i) {
    out += base * ((p_ - a % p_) % p_);
    a /= p_;
    base *= p_;
  }
  return out;
}

long Field::sub(long a, long b) const { return add(a, neg(b)); }

long Field::mul(long a, long b) const {
  check_element(a);
  check_element(b);
  if (m_ == 1) return (a * b) % p_;
  const auto ca = coeffs(a);
  const auto cb = coeffs(b);
  std::vector<long> prod(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i) {
    if (ca[i] == 0) continue;
    for (int j = 0; j < m_; ++j) prod[i + j] += static_cast<long>(ca[i]) * cb[j];
  }
  std::vector<long> red(m_, 0);
  for (int i = 0; i < m_; ++i) red[i] = prod[i] % p_;
  for (int d = m_; d < 2 * m_ - 1; ++d) {
    const long c = prod[d] % p_;
    if (c == 0) continue;
    const auto& row = xpow_[d - m_];
    for (int i = 0; i < m_; ++i) red[i] = (red[i] + c * row[i]) % p_;
  }
  long out = 0, base = 1;
  for (int i = 0; i < m_; ++i) {
    out += base * red[i];
    base *= p_;
  }
  return out;
}

long Field::pow(long a, long e) const {
  check_element(a);
  if (e < 0) fail(Errc::bad_argument, "negative exponent");
  long result = 1, base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

long Field::inv(long a) const {
  check_element(a);
  if (a == 0) fail(Errc::division_by_zero, "inverse of zero");
  return pow(a, q_ - 2);
}

long Field::div(long a, long b) const {
  if (b == 0) fail(Errc::division_by_zero, "division by zero");
  return mul(a, inv(b));
}

}  // namespace etf
