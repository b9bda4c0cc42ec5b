#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etf/rational.hpp"

namespace etf {

/// Design parameters recovered from frame dimensions (M, N) in exact
/// rational arithmetic: alpha^2 = (N-M)/(M(N-1)), v = N*alpha/(1+alpha),
/// b = M, r = 1/alpha, k = N/(M(1+alpha)). A Steiner origin requires alpha
/// to be rational and v, r, k to be integers.
struct DesignRecovery {
  bool steiner = false;
  Rational alpha_sq;
  std::optional<Rational> alpha;  // present iff alpha_sq is a rational square
  Rational v, b, r, k;            // meaningful when alpha is present
  std::string reason;             // offending non-integer(s) when !steiner
};

DesignRecovery recover_design_params(long long m, long long n);

enum class Admissibility {
  inadmissible,
  known_exists,
  known_nonexistent,
  unknown,
};

struct AdmissibilityVerdict {
  Admissibility kind = Admissibility::inadmissible;
  std::string witness;  // family establishing existence, when known_exists
  std::string note;     // extra context (asymptotic thresholds etc.)
};

const char* admissibility_name(Admissibility a);

/// Integrality of r = (v-1)/(k-1) and b = v(v-1)/(k(k-1)), the short list of
/// admissible pairs known not to exist, and membership in the eight known
/// infinite families.
AdmissibilityVerdict admissible(long long k, long long v);

/// Asymptotic-existence thresholds v0(k) for small k (admissible v > v0(k)
/// always carries a design); reported as metadata only.
const std::map<long, long>& asymptotic_thresholds();

struct FamilyRow {
  long M = 0;
  long N = 0;
  long k = 0;
  long v = 0;
  long r = 0;
  bool real_flag = false;
  long hadamard_order = 0;  // r + 1
  std::vector<std::string> constructions;
};

/// All rows of the eight infinite families with 2 <= M <= m_max, computed
/// from the closed forms; rows sharing (M, N) are merged with combined
/// construction labels. Real rows first, then by (M, N).
std::vector<FamilyRow> enumerate_families(long m_max);

struct SeriesRecord {
  long long v = 0;
  long long M = 0;
  long long N = 0;
  Rational redundancy;
  long long hadamard_order = 0;
};

/// The two Steiner series v = jk(k-1)+1 and v = jk(k-1)+k whose frames have
/// redundancy k + 1/j and k(jk+2)/(jk+1) respectively.
std::pair<SeriesRecord, SeriesRecord> asymptotic_series(long long k, long long j);

std::string render_table_text(const std::vector<FamilyRow>& rows);
std::string render_table_csv(const std::vector<FamilyRow>& rows);

}  // namespace etf
