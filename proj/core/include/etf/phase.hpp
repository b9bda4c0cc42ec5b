#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>

namespace etf {

/// Exact root of unity exp(2*pi*i * num/den), kept reduced with 0 <= num < den.
/// Real values are den 1 (+1) and den 2 with num 1 (-1).
struct Phase {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Phase one() { return {0, 1}; }
  static Phase minus_one() { return {1, 2}; }

  /// exp(2*pi*i * n/d), any integers, d != 0.
  static Phase of(std::int64_t n, std::int64_t d) {
    Phase p{n, d};
    p.reduce();
    return p;
  }

  void reduce() {
    if (den < 0) {
      den = -den;
      num = -num;
    }
    num %= den;
    if (num < 0) num += den;
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  Phase times(const Phase& o) const { return of(num * o.den + o.num * den, den * o.den); }
  Phase conj() const { return of(-num, den); }

  bool is_real() const { return den == 1 || den == 2; }
  /// +1 or -1; only meaningful when is_real().
  int real_sign() const { return den == 1 ? 1 : -1; }

  std::complex<double> value() const {
    if (den == 1) return {1.0, 0.0};
    if (den == 2) return {-1.0, 0.0};
    if (den == 4) return num == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
    const double t = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(t), std::sin(t)};
  }

  bool operator==(const Phase& o) const { return num == o.num && den == o.den; }
};

}  // namespace etf
