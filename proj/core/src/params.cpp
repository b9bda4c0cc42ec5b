#include "etf/params.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "etf/error.hpp"
#include "etf/field.hpp"
#include "etf/flat.hpp"

namespace etf {

DesignRecovery recover_design_params(long long m, long long n) {
  if (m < 1 || n <= m) fail(Errc::invalid_dims, "need 1 <= M < N");
  DesignRecovery out;
  out.alpha_sq = Rational(BigInt(n - m), BigInt(m) * BigInt(n - 1));
  out.b = Rational(BigInt(m));
  const auto alpha = out.alpha_sq.sqrt_if_square();
  if (!alpha) {
    out.reason = "alpha^2 = " + out.alpha_sq.str() + " is not the square of a rational";
    return out;
  }
  out.alpha = *alpha;
  const Rational one(1);
  out.v = (Rational(BigInt(n)) * *alpha) / (one + *alpha);
  out.r = one / *alpha;
  out.k = Rational(BigInt(n)) / (Rational(BigInt(m)) * (one + *alpha));
  std::string bad;
  auto check = [&bad](const Rational& x, const char* name) {
    if (!x.is_integer()) {
      if (!bad.empty()) bad += ", ";
      bad += std::string(name) + " = " + x.str();
    }
  };
  check(out.v, "v");
  check(out.r, "r");
  check(out.k, "k");
  if (bad.empty()) {
    out.steiner = true;
  } else {
    out.reason = "non-integral: " + bad;
  }
  return out;
}

const char* admissibility_name(Admissibility a) {
  switch (a) {
    case Admissibility::inadmissible: return "inadmissible";
    case Admissibility::known_exists: return "admissible-known-exists";
    case Admissibility::known_nonexistent: return "admissible-known-nonexistent";
    case Admissibility::unknown: return "admissible-unknown";
  }
  return "?";
}

const std::map<long, long>& asymptotic_thresholds() {
  static const std::map<long, long> v0 = {{6, 801}, {7, 2605}, {8, 3753}, {9, 16497}};
  return v0;
}

namespace {

bool is_prime_power(long long n) {
  if (n < 2) return false;
  long long p = n;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  long long rest = n;
  while (rest % p == 0) rest /= p;
  // p is the smallest divisor (hence prime) or n itself (also prime).
  return rest == 1;
}

// Family membership witnesses for existence.
std::string family_witness(long long k, long long v) {
  if (k == 2 && v >= 2) return "pair designs (all 2-element blocks)";
  if (k == 3 && (v % 6 == 1 || v % 6 == 3) && v >= 3) return "Steiner triple systems";
  if (k == 4 && (v % 12 == 1 || v % 12 == 4) && v >= 4) return "4-element block family";
  if (k == 5 && (v % 20 == 1 || v % 20 == 5) && v >= 5) return "5-element block family";
  if (is_prime_power(k)) {
    // affine: v = k^n, n >= 2
    long long power = k * k;
    while (power <= v) {
      if (power == v) return "affine geometry AG(n,q)";
      if (power > v / k) break;
      power *= k;
    }
  }
  if (k >= 3 && is_prime_power(k - 1)) {
    const long long q = k - 1;
    // projective: v = (q^{n+1}-1)/(q-1), n >= 2
    long long sum = 1 + q + q * q;  // n = 2
    long long top = q * q;
    while (sum <= v) {
      if (sum == v) return "projective geometry PG(n,q)";
      if (top > v) break;
      top *= q;
      sum += top;
    }
    if (v == q * q * q + 1) return "Hermitian unital";
  }
  // Denniston: k = 2^r, v = 2^{r+s} + 2^r - 2^s, 2 <= r < s
  if (k >= 4 && (k & (k - 1)) == 0) {
    int r = 0;
    while ((1LL << r) < k) ++r;
    if (r >= 2) {
      for (int s = r + 1; s < 60; ++s) {
        const long long cand = (1LL << (r + s)) + (1LL << r) - (1LL << s);
        if (cand == v) return "Denniston arc design";
        if (cand > v) break;
      }
    }
  }
  return {};
}

}  // namespace

AdmissibilityVerdict admissible(long long k, long long v) {
  if (k < 2 || v < k) fail(Errc::bad_argument, "need 2 <= k <= v");
  AdmissibilityVerdict out;
  if ((v - 1) % (k - 1) != 0 || (v * (v - 1)) % (k * (k - 1)) != 0) {
    out.kind = Admissibility::inadmissible;
    return out;
  }
  static const std::vector<std::pair<long long, long long>> nonexistent = {
      {6, 16}, {6, 21}, {6, 36}, {6, 46}, {7, 43}};
  for (const auto& [nk, nv] : nonexistent) {
    if (k == nk && v == nv) {
      out.kind = Admissibility::known_nonexistent;
      return out;
    }
  }
  const auto witness = family_witness(k, v);
  if (!witness.empty()) {
    out.kind = Admissibility::known_exists;
    out.witness = witness;
    return out;
  }
  out.kind = Admissibility::unknown;
  const auto& v0 = asymptotic_thresholds();
  auto it = v0.find(static_cast<long>(k));
  if (it != v0.end() && v > it->second) {
    out.note = "v > v0(" + std::to_string(k) + ") = " + std::to_string(it->second) +
               ": existence is guaranteed asymptotically";
  }
  return out;
}

namespace {

struct Instance {
  long M, N, k, v;
  std::string label;
};

void emit(std::vector<Instance>& out, long m_max, long M, long N, long k, long v, std::string label) {
  // Rows with M < 2 are degenerate (a single vector dimension); the family
  // tables start where genuine equiangular systems appear.
  if (M < 2 || M > m_max) return;
  out.push_back({M, N, k, v, std::move(label)});
}

}  // namespace

std::vector<FamilyRow> enumerate_families(long m_max) {
  std::vector<Instance> inst;
  if (m_max >= 1) {
    // 2-element blocks: M = v(v-1)/2, N = v^2.
    for (long v = 2;; ++v) {
      const long M = v * (v - 1) / 2;
      if (M > m_max) break;
      emit(inst, m_max, M, v * v, 2, v, "2-blocks of v=" + std::to_string(v));
    }
    // Steiner triples: v = 1, 3 (mod 6).
    for (long v = 3;; ++v) {
      if (v % 6 != 1 && v % 6 != 3) continue;
      const long M = v * (v - 1) / 6;
      if (M > m_max) break;
      emit(inst, m_max, M, v * (v + 1) / 2, 3, v, "3-blocks of v=" + std::to_string(v));
    }
    // 4-element blocks: v = 1, 4 (mod 12).
    for (long v = 4;; ++v) {
      if (v % 12 != 1 && v % 12 != 4) continue;
      const long M = v * (v - 1) / 12;
      if (M > m_max) break;
      emit(inst, m_max, M, v * (v + 2) / 3, 4, v, "4-blocks of v=" + std::to_string(v));
    }
    // 5-element blocks: v = 1, 5 (mod 20).
    for (long v = 5;; ++v) {
      if (v % 20 != 1 && v % 20 != 5) continue;
      const long M = v * (v - 1) / 20;
      if (M > m_max) break;
      emit(inst, m_max, M, v * (v + 3) / 4, 5, v, "5-blocks of v=" + std::to_string(v));
    }
    // Affine and projective geometries over every prime power q.
    for (long q = 2;; ++q) {
      if (!is_prime_power(q)) continue;
      // Smallest affine M for this q is n = 2: q(q+1); stop once that alone
      // exceeds m_max.
      if (q * (q + 1) > m_max) break;
      for (int n = 2;; ++n) {
        // affine: v = q^n, M = q^{n-1} (q^n - 1)/(q - 1)
        long vq = 1;
        bool overflow = false;
        for (int i = 0; i < n; ++i) {
          if (vq > kOrderBound / q) {
            overflow = true;
            break;
          }
          vq *= q;
        }
        if (overflow) break;
        const long r = (vq - 1) / (q - 1);
        const long M = (vq / q) * r;
        if (M > m_max) break;
        emit(inst, m_max, M, vq * (1 + r), q, vq,
             "Affine with q=" + std::to_string(q) + ", n=" + std::to_string(n));
      }
      for (int n = 2;; ++n) {
        // projective: v = (q^{n+1}-1)/(q-1), k = q+1, r = (q^n-1)/(q-1)
        long top = 1;
        bool overflow = false;
        for (int i = 0; i <= n; ++i) {
          if (top > kOrderBound / q) {
            overflow = true;
            break;
          }
          top *= q;
        }
        if (overflow) break;
        const long v = (top - 1) / (q - 1);
        const long r = (top / q - 1) / (q - 1);
        const long M = v * r / (q + 1);
        if (M > m_max) break;
        emit(inst, m_max, M, v * (1 + r), q + 1, v,
             "Projective with q=" + std::to_string(q) + ", n=" + std::to_string(n));
      }
    }
    // Unitals: v = q^3 + 1, k = q + 1.
    for (long q = 2;; ++q) {
      if (!is_prime_power(q)) continue;
      if (q > 1290) break;  // q^3 overflow guard, far beyond any table
      const long v = q * q * q + 1;
      const long M = q * q * v / (q + 1);
      if (M > m_max) break;
      emit(inst, m_max, M, (q * q + 1) * v, q + 1, v, "Unital with q=" + std::to_string(q));
    }
    // Denniston: k = 2^r, v = 2^{r+s} + 2^r - 2^s, 2 <= r < s.
    for (int r = 2; r < 30; ++r) {
      const long k = 1L << r;
      bool any = false;
      for (int s = r + 1; r + s < 60; ++s) {
        const long long v = (1LL << (r + s)) + (1LL << r) - (1LL << s);
        const long long M = ((1LL << s) + 1) * v / k;
        if (M > m_max) break;
        any = true;
        emit(inst, m_max, static_cast<long>(M), static_cast<long>(((1LL << s) + 2) * v), k,
             static_cast<long>(v), "Denniston with r=" + std::to_string(r) + ", s=" + std::to_string(s));
      }
      if (!any && k * 3 > m_max) break;
    }
  }

  // Merge duplicate (M, N) rows, keeping labels in family order (the order
  // the instances were generated above).
  std::map<std::pair<long, long>, FamilyRow> merged;
  for (const auto& in : inst) {
    auto& row = merged[{in.M, in.N}];
    if (row.M == 0) {
      row.M = in.M;
      row.N = in.N;
      row.k = in.k;
      row.v = in.v;
      row.r = (in.v - 1) / (in.k - 1);
      row.hadamard_order = row.r + 1;
      row.real_flag = real_hadamard_constructible(row.hadamard_order);
    }
    row.constructions.push_back(in.label);
  }

  std::vector<FamilyRow> rows;
  rows.reserve(merged.size());
  for (auto& [key, row] : merged) rows.push_back(std::move(row));
  std::sort(rows.begin(), rows.end(), [](const FamilyRow& a, const FamilyRow& b) {
    if (a.real_flag != b.real_flag) return a.real_flag && !b.real_flag;
    if (a.M != b.M) return a.M < b.M;
    return a.N < b.N;
  });
  return rows;
}

std::pair<SeriesRecord, SeriesRecord> asymptotic_series(long long k, long long j) {
  if (k < 2) fail(Errc::invalid_k, "series needs k >= 2");
  if (j < 1) fail(Errc::bad_argument, "series needs j >= 1");
  SeriesRecord a, b;
  // v = jk(k-1) + 1: r = jk, M = j*v, N = (jk+1)*v.
  a.v = j * k * (k - 1) + 1;
  a.M = j * a.v;
  a.N = (j * k + 1) * a.v;
  a.redundancy = Rational(BigInt(j * k + 1), BigInt(j));  // == k + 1/j
  a.hadamard_order = j * k + 1;
  // v = jk(k-1) + k: r = jk+1, M = (jk+1)(j(k-1)+1), N = k(jk+2)(j(k-1)+1).
  b.v = j * k * (k - 1) + k;
  b.M = (j * k + 1) * (j * (k - 1) + 1);
  b.N = k * (j * k + 2) * (j * (k - 1) + 1);
  b.redundancy = Rational(BigInt(k) * BigInt(j * k + 2), BigInt(j * k + 1));
  b.hadamard_order = j * k + 2;
  return {a, b};
}

namespace {

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& s : labels) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

}  // namespace

std::string render_table_text(const std::vector<FamilyRow>& rows) {
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%5s %5s %3s %4s %3s  %3s  %s\n", "M", "N", "k", "v", "r", "R/C",
                "construction of the Steiner system");
  os << buf;
  bool printed_complex_rule = false;
  bool saw_real = false;
  for (const auto& row : rows) {
    saw_real = saw_real || row.real_flag;
    if (saw_real && !row.real_flag && !printed_complex_rule) {
      os << "  ----\n";
      printed_complex_rule = true;
    }
    std::snprintf(buf, sizeof(buf), "%5ld %5ld %3ld %4ld %3ld  %3s  %s\n", row.M, row.N, row.k, row.v,
                  row.r, row.real_flag ? "R" : "C", join_labels(row.constructions).c_str());
    os << buf;
  }
  return os.str();
}

std::string render_table_csv(const std::vector<FamilyRow>& rows) {
  std::ostringstream os;
  os << "M,N,k,v,r,realness,constructions\n";
  for (const auto& row : rows) {
    os << row.M << ',' << row.N << ',' << row.k << ',' << row.v << ',' << row.r << ','
       << (row.real_flag ? "real" : "complex") << ",\"" << join_labels(row.constructions) << "\"\n";
  }
  return os.str();
}

}  // namespace etf
