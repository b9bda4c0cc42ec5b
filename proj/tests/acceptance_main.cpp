// Acceptance gate: end-to-end checks of the generator CLI and library
// against frozen references, one pass/fail line per criterion.
//
// usage: etf_acceptance <path-to-etf-forge-cli> [workdir]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "etf/design.hpp"
#include "etf/etf.hpp"
#include "etf/field.hpp"
#include "etf/io.hpp"
#include "etf/jacobi.hpp"
#include "etf/params.hpp"
#include "etf/rip.hpp"
#include "support/golden_table.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
using namespace etf;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli;
fs::path g_work;
int g_failures = 0;

struct Criterion {
  int id;
  std::string name;
  bool ok = true;
  std::vector<std::string> notes;
  Clock::time_point start = Clock::now();

  Criterion(int id_, std::string name_) : id(id_), name(std::move(name_)) {}

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }

  void finish(double budget_seconds) {
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > budget_seconds) {
      ok = false;
      notes.push_back("FAILED: runtime " + std::to_string(secs) + " s exceeds budget " +
                      std::to_string(budget_seconds) + " s");
    }
    std::printf("[%s] criterion %d: %s (%.0f ms)\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                secs * 1000.0);
    for (const auto& n : notes) std::printf("       %s\n", n.c_str());
    if (!ok) ++g_failures;
  }
};

int run_cli(const std::string& args, const std::string& log_name) {
  const std::string log = (g_work / log_name).string();
  const std::string cmd = "cd '" + g_work.string() + "' && '" + g_cli + "' " + args + " > '" + log +
                          ".out' 2> '" + log + ".err'";
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Reference sign patterns, blocks of r+1 columns; ' ' marks structural zero.
const char* k6x16[6] = {
    "+-+-+-+-        ",
    "++--    +-+-    ",
    "+--+        +-+-",
    "    ++--++--    ",
    "    +--+    ++--",
    "        +--++--+",
};
const char* k7x28[7] = {
    "+-+-+-+-+-+-                ",
    "++--        +-+-+-+-        ",
    "+--+                +-+-+-+-",
    "    ++--    ++--    ++--    ",
    "    +--+        ++--    ++--",
    "        ++--+--+        +--+",
    "        +--+    +--++--+    ",
};
// 3x9 reference: powers of w = exp(2 pi i/3); -1 marks structural zero.
const int k3x9[3][9] = {
    {0, 2, 1, 0, 2, 1, -1, -1, -1},
    {0, 1, 2, -1, -1, -1, 0, 2, 1},
    {-1, -1, -1, 0, 1, 2, 0, 1, 2},
};

bool sign_pattern_matches(const EtfMatrix& f, const char* const* pattern, Criterion& c) {
  const auto dense = f.dense();
  const double s = f.scale();
  for (int i = 0; i < f.rows; ++i) {
    for (int j = 0; j < f.cols; ++j) {
      const char want = pattern[i][j];
      const Complex z = dense.at(i, j);
      if (want == ' ') {
        if (std::abs(z) != 0.0) {
          c.require(false, "expected zero at (" + std::to_string(i) + "," + std::to_string(j) + ")");
          return false;
        }
      } else if (std::abs(z.real() - (want == '+' ? s : -s)) > 1e-12 || std::abs(z.imag()) > 0) {
        c.require(false, "sign mismatch at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        return false;
      }
    }
  }
  return true;
}

// Unscaled integer frame-operator check: F F^T == target * I.
bool unscaled_frame_operator_is(const EtfMatrix& f, long target, Criterion& c) {
  std::vector<std::vector<std::pair<int, int>>> rows(static_cast<std::size_t>(f.rows));
  for (int n = 0; n < f.cols; ++n) {
    for (const auto& e : f.columns[static_cast<std::size_t>(n)]) {
      if (!e.phase.is_real()) return false;
      rows[static_cast<std::size_t>(e.row)].emplace_back(n, e.phase.real_sign());
    }
  }
  for (int i = 0; i < f.rows; ++i) {
    for (int j = i; j < f.rows; ++j) {
      long dot = 0;
      std::size_t a = 0, b = 0;
      const auto& ri = rows[static_cast<std::size_t>(i)];
      const auto& rj = rows[static_cast<std::size_t>(j)];
      while (a < ri.size() && b < rj.size()) {
        if (ri[a].first < rj[b].first) {
          ++a;
        } else if (ri[a].first > rj[b].first) {
          ++b;
        } else {
          dot += ri[a].second * rj[b].second;
          ++a;
          ++b;
        }
      }
      if (dot != (i == j ? target : 0)) {
        c.require(false, "unscaled FF^T (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                             std::to_string(dot));
        return false;
      }
    }
  }
  return true;
}

struct Generator {
  std::string kind;  // pair | triple | affine | projective | unital
  long v = 0, q = 0;
  int n = 0;
};

// First implemented generator named in a catalog row's labels, if any.
bool generator_for(const std::string& labels, Generator& out) {
  std::istringstream is(labels);
  std::string part;
  while (std::getline(is, part, ';')) {
    while (!part.empty() && part.front() == ' ') part.erase(part.begin());
    long a = 0, b = 0;
    if (std::sscanf(part.c_str(), "2-blocks of v=%ld", &a) == 1) {
      out = {"pair", a, 0, 0};
      return true;
    }
    if (std::sscanf(part.c_str(), "3-blocks of v=%ld", &a) == 1) {
      out = {"triple", a, 0, 0};
      return true;
    }
    if (std::sscanf(part.c_str(), "Affine with q=%ld, n=%ld", &a, &b) == 2) {
      out = {"affine", 0, a, static_cast<int>(b)};
      return true;
    }
    if (std::sscanf(part.c_str(), "Projective with q=%ld, n=%ld", &a, &b) == 2) {
      out = {"projective", 0, a, static_cast<int>(b)};
      return true;
    }
    if (std::sscanf(part.c_str(), "Unital with q=%ld", &a) == 1) {
      out = {"unital", 0, a, 0};
      return true;
    }
  }
  return false;
}

SteinerSystem build(const Generator& g) {
  if (g.kind == "pair") return pair_design(g.v);
  if (g.kind == "triple") return steiner_triple(g.v);
  if (g.kind == "affine") return affine_lines(PrimePower::factor(g.q), g.n);
  if (g.kind == "projective") return projective_lines(PrimePower::factor(g.q), g.n);
  return hermitian_unital(PrimePower::factor(g.q));
}

const std::vector<std::pair<golden::Row, EtfMatrix>>& assembled_catalog() {
  static const std::vector<std::pair<golden::Row, EtfMatrix>> cache = [] {
    std::vector<std::pair<golden::Row, EtfMatrix>> out;
    for (std::size_t i = 0; i < golden::kTableSize; ++i) {
      const auto& row = golden::kTable[i];
      Generator gen;
      if (!generator_for(row.labels, gen)) continue;
      const auto system = build(gen);
      out.emplace_back(row, assemble_default(system, true));
    }
    return out;
  }();
  return cache;
}

void criterion1() {
  Criterion c(1, "golden 6x16 from `generate --family pair --v 4 --prefer-real`");
  const int rc = run_cli("generate --family pair --v 4 --prefer-real --out six", "c1");
  c.require(rc == 0, "generate exited " + std::to_string(rc));
  if (rc == 0) {
    const auto loaded = io::load_frame((g_work / "six").string());
    c.require(loaded.meta.scale_num == 1 && loaded.meta.scale_den == 3, "scale is not 1/sqrt(3)");
    c.require(loaded.etf.has_value(), "entries did not reconstruct exactly");
    if (loaded.etf) {
      sign_pattern_matches(*loaded.etf, k6x16, c);
      c.require(unscaled_frame_operator_is(*loaded.etf, 8, c), "unscaled FF^T != 8I");
      const auto tight = verify_tight(*loaded.etf);
      c.require(tight.pass && tight.exact_integer_pass, "tightness check failed");
      const auto eq = verify_equiangular(*loaded.etf);
      c.require(eq.pass && eq.exact_pass, "equiangularity check failed");
      c.require(eq.same_block_sign_ok, "same-block inner products are not all -1/3");
      c.require(eq.max_same_block_dev == 0.0 && eq.max_cross_block_dev <= 1e-15,
                "inner products deviate from +-1/3");
    }
    const int vrc = run_cli("verify six", "c1v");
    c.require(vrc == 0, "verify exited " + std::to_string(vrc));
    // Identical job, byte-identical output.
    run_cli("generate --family pair --v 4 --prefer-real --out six_again", "c1d");
    c.require(slurp(g_work / "six.mtx") == slurp(g_work / "six_again.mtx"),
              "repeated generate differs byte-wise");
  }
  c.finish(1.0);
}

void criterion2() {
  {
    Criterion c(2, "golden 3x9 complex frame (entries 0 or w^j/sqrt(2))");
    const int rc = run_cli("generate --family pair --v 3 --out nine", "c2a");
    c.require(rc == 0, "generate exited " + std::to_string(rc));
    if (rc == 0) {
      const auto loaded = io::load_frame((g_work / "nine").string());
      c.require(loaded.meta.scale_num == 1 && loaded.meta.scale_den == 2, "scale is not 1/sqrt(2)");
      c.require(loaded.etf.has_value(), "entries did not reconstruct exactly");
      if (loaded.etf) {
        const auto& f = *loaded.etf;
        for (int i = 0; i < 3 && c.ok; ++i) {
          for (int j = 0; j < 9; ++j) {
            Phase found;
            bool present = false;
            for (const auto& e : f.columns[static_cast<std::size_t>(j)]) {
              if (e.row == i) {
                found = e.phase;
                present = true;
              }
            }
            const int want = k3x9[i][j];
            if (want < 0) {
              c.require(!present, "expected zero entry");
            } else {
              c.require(present && found == Phase::of(want, 3), "cube-root entry mismatch");
            }
          }
        }
        const auto tight = verify_tight(f, 1e-9);
        const auto eq = verify_equiangular(f, 1e-9);
        c.require(tight.pass, "tightness at 1e-9 failed");
        c.require(eq.pass && std::abs(eq.alpha - 0.5) < 1e-15, "alpha != 1/2");
      }
    }
    c.finish(1.0);
  }
  {
    Criterion c(2, "golden 7x28 Fano frame (scale 1/sqrt(3))");
    const int rc = run_cli("generate --family projective --q 2 --n 2 --out fano", "c2b");
    c.require(rc == 0, "generate exited " + std::to_string(rc));
    if (rc == 0) {
      const auto loaded = io::load_frame((g_work / "fano").string());
      c.require(loaded.meta.scale_num == 1 && loaded.meta.scale_den == 3, "scale is not 1/sqrt(3)");
      c.require(loaded.etf.has_value(), "entries did not reconstruct exactly");
      if (loaded.etf) {
        sign_pattern_matches(*loaded.etf, k7x28, c);
        const auto tight = verify_tight(*loaded.etf, 1e-9);
        const auto eq = verify_equiangular(*loaded.etf, 1e-9);
        c.require(tight.pass, "tightness at 1e-9 failed");
        c.require(eq.pass && std::abs(eq.alpha - 1.0 / 3.0) < 1e-15, "alpha != 1/3");
      }
    }
    c.finish(1.0);
  }
}

void criterion3() {
  Criterion c(3, "catalog reproduction: `table --max-m 100`");
  const int rc = run_cli("table --max-m 100 --format csv --out catalog.csv", "c3");
  c.require(rc == 0, "table exited " + std::to_string(rc));
  if (rc == 0) {
    std::ifstream in(g_work / "catalog.csv");
    std::string line;
    std::getline(in, line);  // header
    std::vector<std::string> data;
    while (std::getline(in, line)) {
      if (!line.empty()) data.push_back(line);
    }
    c.require(data.size() == golden::kTableSize,
              "row count " + std::to_string(data.size()) + " != " + std::to_string(golden::kTableSize));
    for (std::size_t i = 0; i < data.size() && i < golden::kTableSize; ++i) {
      const auto& want = golden::kTable[i];
      char labels[256] = {0};
      long M, N, k, v, r;
      char realness[16] = {0};
      const int got = std::sscanf(data[i].c_str(), "%ld,%ld,%ld,%ld,%ld,%15[^,],\"%255[^\"]\"", &M, &N,
                                  &k, &v, &r, realness, labels);
      if (got != 7 || M != want.M || N != want.N || k != want.k || v != want.v || r != want.r ||
          (std::string(realness) == "real") != want.real || std::string(labels) != want.labels) {
        c.require(false, "row " + std::to_string(i) + " mismatch: " + data[i]);
        break;
      }
    }
    c.note("table has 6 real + 28 complex rows (the published table's own row set;");
    c.note("its (82,451) row prints r=19 where the closed forms force r=10)");
  }
  c.finish(5.0);
}

void criterion4() {
  Criterion c(4, "family round trip: assemble and fully verify every generable catalog row");
  const auto& frames = assembled_catalog();
  c.require(frames.size() == 31, "expected 31 generable rows, got " + std::to_string(frames.size()));
  for (const auto& [row, f] : frames) {
    const std::string tag = "(" + std::to_string(row.M) + "," + std::to_string(row.N) + ")";
    if (f.rows != row.M || f.cols != row.N) {
      c.require(false, tag + " assembled with wrong dimensions");
      continue;
    }
    c.require(f.all_real() == row.real, tag + " realness mismatch");
    const auto tight = verify_tight(f, 1e-9);
    c.require(tight.pass, tag + " tightness failed");
    const auto eq = verify_equiangular(f, 1e-9);
    c.require(eq.pass && eq.max_dev <= 1e-9, tag + " equiangularity failed");
    const auto params = compute_params(f);
    c.require(params.density == Rational(row.k, row.v), tag + " density != k/v");
    c.require(params.density_matches_welch, tag + " density formula cross-check failed");
    c.require(gram_rank(f) == row.M, tag + " Gram rank != M");
    if (!c.ok) break;
  }
  c.finish(300.0);
}

void criterion5() {
  Criterion c(5, "design-parameter recovery in exact arithmetic");
  const auto r1 = recover_design_params(19, 76);
  c.require(!r1.steiner && r1.alpha.has_value() && r1.v == Rational(38, 3) && r1.k == Rational(10, 3),
            "19x76 should recover v=38/3, k=10/3 and be rejected");
  const auto r2 = recover_design_params(42, 288);
  c.require(r2.steiner && r2.v == Rational(36) && r2.k == Rational(6), "42x288 should recover (2,6,36)");
  c.require(admissible(6, 36).kind == Admissibility::known_nonexistent,
            "(6,36) should be known nonexistent");
  const auto r3 = recover_design_params(28, 288);
  c.require(!r3.steiner && !r3.alpha.has_value(), "28x288 has irrational alpha");
  c.note("the 288-vector frame matching the nonexistent (2,6,36) design is 42x288;");
  c.note("28x288 (as printed in the reference discussion) has alpha^2 = 65/2009, not a square");
  for (std::size_t i = 0; i < golden::kTableSize; ++i) {
    const auto& row = golden::kTable[i];
    const auto rec = recover_design_params(row.M, row.N);
    if (!rec.steiner || rec.v != Rational(row.v) || rec.b != Rational(row.M) ||
        rec.r != Rational(row.r) || rec.k != Rational(row.k)) {
      c.require(false, "round trip failed at (" + std::to_string(row.M) + "," + std::to_string(row.N) + ")");
      break;
    }
  }
  // CLI surface for the same checks.
  c.require(run_cli("params 19 76", "c5a") == 0, "params 19 76 exited nonzero");
  c.require(slurp(g_work / "c5a.out").find("NotSteiner: v=38/3") != std::string::npos,
            "params 19 76 output missing v=38/3");
  c.require(run_cli("params 42 288", "c5b") == 0, "params 42 288 exited nonzero");
  c.require(slurp(g_work / "c5b.out").find("known-nonexistent") != std::string::npos,
            "params 42 288 output missing the nonexistence verdict");
  c.finish(1.0);
}

void criterion6() {
  Criterion c(6, "Naimark complements of the 6x16 and 7x28 frames");
  int rc = run_cli("complement six --out ten", "c6a");
  c.require(rc == 0, "complement exited " + std::to_string(rc));
  rc = run_cli("verify ten", "c6b");
  c.require(rc == 0, "verify of the complement exited " + std::to_string(rc));
  const auto ten = io::load_frame((g_work / "ten").string());
  c.require(ten.frame.rows == 10 && ten.frame.cols == 16, "complement is not 10x16");
  c.require(std::abs(coherence(ten.frame) - 0.2) <= 1e-9, "coherence != 1/5");
  const auto eq10 = verify_equiangular(ten.frame, 1e-9);
  c.require(eq10.pass, "10x16 equiangularity failed");

  const auto comp28 = naimark_complement(
      assemble_etf(projective_lines(PrimePower::make(2, 1), 2), {sylvester(2)}));
  c.require(comp28.rows == 21 && comp28.cols == 28, "complement is not 21x28");
  const double want = std::sqrt((28.0 - 21.0) / (21.0 * 27.0));
  c.require(std::abs(coherence(comp28) - want) <= 1e-9, "coherence != sqrt(7/(21*27))");
  const auto eq21 = verify_equiangular(comp28, 1e-9);
  c.require(eq21.pass, "21x28 equiangularity failed");
  c.finish(1.0);
}

void criterion7() {
  Criterion c(7, "restricted isometry constants of the 6x16 frame and block certificates");
  const auto f = assemble_etf(pair_design(4), {sylvester(2)});
  const auto dense = f.dense();

  const auto r2 = ric_exhaustive(dense, 2);
  c.require(r2.subsets == 120 && r2.delta_exact && std::abs(*r2.delta_exact - 1.0 / 3.0) <= 1e-9,
            "delta_2 != 1/3 over 120 subsets");
  const auto r3 = ric_exhaustive(dense, 3);
  c.require(r3.subsets == 560 && r3.delta_exact && *r3.delta_exact <= 2.0 / 3.0 + 1e-9,
            "delta_3 > 2/3 over 560 subsets");
  const auto r4 = ric_exhaustive(dense, 4);
  c.require(r4.subsets == 1820 && r4.delta_exact && *r4.delta_exact >= 1.0 - 1e-6,
            "delta_4 < 1 over 1820 subsets");
  c.require(r4.witness == std::vector<int>{0, 1, 2, 3}, "delta_4 witness is not the first block");

  for (const auto& [row, frame] : assembled_catalog()) {
    const auto cert = block_dependency_certificate(frame);
    if (cert.sigma_min > 1e-9 || cert.dependency_residual > 1e-9) {
      c.require(false, "certificate failed at (" + std::to_string(row.M) + "," +
                           std::to_string(row.N) + "): sigma_min = " + std::to_string(cert.sigma_min));
      break;
    }
    // The witness subset also reaches delta >= 1 through the eigenvalue route.
    const auto direct = ric_on_subsets(frame.dense(), cert.K, {cert.witness});
    if (direct.delta_lower < 1.0 - 1e-6) {
      c.require(false, "witness delta " + std::to_string(direct.delta_lower) + " < 1 at (" +
                           std::to_string(row.M) + "," + std::to_string(row.N) + ")");
      break;
    }
  }
  c.finish(10.0);
}

void criterion8() {
  Criterion c(8, "Gershgorin sparsity-level bound against exact arithmetic");
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<long> mdist(1, 500);
  std::uniform_int_distribution<long> ddist(1, 99);
  for (int trial = 0; trial < 100; ++trial) {
    const long m = mdist(rng);
    const long n = m + 1 + mdist(rng);
    const long d = ddist(rng);  // delta = d/100
    // Exact: K = 1 + max{ t >= 0 : t^2 (N-M) * 100^2 <= d^2 M (N-1) }.
    long t = 0;
    while ((t + 1) * (t + 1) * (n - m) * 10000 <= d * d * m * (n - 1)) ++t;
    const long got = gershgorin_K_bound(m, n, static_cast<double>(d) / 100.0);
    if (got != 1 + t) {
      c.require(false, "mismatch at M=" + std::to_string(m) + " N=" + std::to_string(n) +
                           " delta=" + std::to_string(d) + "/100: " + std::to_string(got) +
                           " != " + std::to_string(1 + t));
      break;
    }
  }
  // Steiner identity: 1 + sqrt(M(N-1)/(N-M)) = r + 1 exactly.
  for (std::size_t i = 0; i < golden::kTableSize; ++i) {
    const auto& row = golden::kTable[i];
    if (row.M * (row.N - 1) != row.r * row.r * (row.N - row.M)) {
      c.require(false, "integer identity M(N-1) = r^2(N-M) failed at (" + std::to_string(row.M) +
                           "," + std::to_string(row.N) + ")");
      break;
    }
  }
  c.finish(5.0);
}

void criterion9() {
  Criterion c(9, "property suites (field axioms, pair scans, Parseval, oracles)");

  // Field axioms, exhaustive for every prime power q <= 64.
  for (long q = 2; q <= 64; ++q) {
    long p = q;
    for (long d = 2; d * d <= q; ++d) {
      if (q % d == 0) {
        p = d;
        break;
      }
    }
    long rest = q;
    int m = 0;
    while (rest % p == 0) {
      rest /= p;
      ++m;
    }
    if (rest != 1 || !is_prime(p)) continue;
    const auto f = Field::make(p, m);
    bool ok = true;
    for (long a = 0; a < q && ok; ++a) {
      for (long b = 0; b < q && ok; ++b) {
        ok = ok && f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
        for (long cc = 0; cc < q && ok; ++cc) {
          ok = ok && f.mul(f.mul(a, b), cc) == f.mul(a, f.mul(b, cc)) &&
               f.mul(a, f.add(b, cc)) == f.add(f.mul(a, b), f.mul(a, cc));
        }
      }
      if (a != 0) ok = ok && f.mul(a, f.inv(a)) == f.one();
    }
    if (!ok) {
      c.require(false, "field axioms failed for q = " + std::to_string(q));
      break;
    }
  }

  // Full pair scans for every generated design (v <= 100 throughout).
  const auto& frames = assembled_catalog();
  for (const auto& [row, f] : frames) {
    const auto check = verify_design(f.provenance->system);
    if (!check.pass || f.provenance->system.v > 100) {
      c.require(false, "design scan failed at (" + std::to_string(row.M) + "," +
                           std::to_string(row.N) + "): " + check.detail);
      break;
    }
  }

  // Parseval on 100 random vectors per frame, 1e-9 relative.
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (const auto& [row, f] : frames) {
    const double bound = static_cast<double>(f.cols) / f.rows;
    bool ok = true;
    for (int trial = 0; trial < 100 && ok; ++trial) {
      std::vector<Complex> x(static_cast<std::size_t>(f.rows));
      double norm2 = 0;
      for (auto& z : x) {
        z = Complex{dist(rng), dist(rng)};
        norm2 += std::norm(z);
      }
      double sum = 0;
      for (const auto& ip : analysis_apply(f, x)) sum += std::norm(ip);
      ok = std::abs(sum - bound * norm2) <= 1e-9 * bound * norm2;
    }
    if (!ok) {
      c.require(false, "Parseval failed at (" + std::to_string(row.M) + "," + std::to_string(row.N) + ")");
      break;
    }
  }

  // Sparse analysis operator against the dense oracle at 1e-12.
  for (const auto& [row, f] : frames) {
    const auto dense = f.dense();
    std::vector<Complex> x(static_cast<std::size_t>(f.rows));
    for (auto& z : x) z = Complex{dist(rng), dist(rng)};
    const auto fast = analysis_apply(f, x);
    const auto slow = oracles::dense_adjoint_apply(dense, x);
    for (std::size_t i = 0; i < fast.size(); ++i) {
      if (std::abs(fast[i] - slow[i]) > 1e-12) {
        c.require(false, "analysis mismatch at (" + std::to_string(row.M) + "," +
                             std::to_string(row.N) + ")");
        break;
      }
    }
  }

  // Subset spectral radii against the characteristic-polynomial oracle,
  // 50 random subsets with K <= 4.
  const auto dense6 = assemble_etf(pair_design(4), {sylvester(2)}).dense();
  const auto dense9 = assemble_etf(pair_design(3), {dft_matrix(3)}).dense();
  for (int trial = 0; trial < 50; ++trial) {
    const auto& dense = (trial % 2 == 0) ? dense6 : dense9;
    std::uniform_int_distribution<int> kdist(2, 4);
    const int k = kdist(rng);
    std::vector<int> pool(static_cast<std::size_t>(dense.cols));
    for (int i = 0; i < dense.cols; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> subset(pool.begin(), pool.begin() + k);
    std::sort(subset.begin(), subset.end());
    auto g = FrameMatrix::zero(k, k);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        g.at(a, b) =
            column_inner(dense, subset[static_cast<std::size_t>(a)], subset[static_cast<std::size_t>(b)]);
      }
    }
    const auto rep = ric_on_subsets(dense, k, {subset});
    const auto ext = oracles::charpoly_extremes(g);
    const double oracle_delta = std::max(ext.max - 1.0, 1.0 - ext.min);
    if (std::abs(rep.delta_lower - oracle_delta) > 1e-10) {
      c.require(false, "spectral radius mismatch vs charpoly oracle");
      break;
    }
  }
  c.finish(120.0);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: etf_acceptance <path-to-etf-forge> [workdir]\n");
    return 2;
  }
  g_cli = fs::absolute(argv[1]).string();
  if (argc >= 3) {
    g_work = fs::absolute(argv[2]);
  } else {
    g_work = fs::temp_directory_path() / "etf_acceptance_work";
  }
  fs::remove_all(g_work);
  fs::create_directories(g_work);

  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}
