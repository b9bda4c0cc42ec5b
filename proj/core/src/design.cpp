#include "etf/design.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace etf {

namespace {

void sort_blocks(SteinerSystem& s) {
  for (auto& blk : s.blocks) std::sort(blk.begin(), blk.end());
  std::sort(s.blocks.begin(), s.blocks.end());
}

void check_order_bound(long v) {
  if (v > kOrderBound) fail(Errc::too_large, "design order exceeds the configured bound");
}

}  // namespace

std::uint64_t SteinerSystem::canonical_hash() const {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a, 64-bit offset basis
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffULL;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(v));
  mix(static_cast<std::uint64_t>(k));
  auto sorted = blocks;
  for (auto& blk : sorted) std::sort(blk.begin(), blk.end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& blk : sorted) {
    for (int p : blk) mix(static_cast<std::uint64_t>(p));
  }
  return h;
}

SteinerSystem pair_design(long v) {
  if (v < 2) fail(Errc::invalid_v, "pair design needs v >= 2");
  check_order_bound(v);
  SteinerSystem s;
  s.v = v;
  s.k = 2;
  s.label = "pair(v=" + std::to_string(v) + ")";
  s.blocks.reserve(static_cast<std::size_t>(v * (v - 1) / 2));
  for (int i = 0; i < v; ++i) {
    for (int j = i + 1; j < v; ++j) s.blocks.push_back({i, j});
  }
  return s;  // already lexicographic
}

SteinerSystem steiner_triple(long v) {
  if (v < 3 || (v % 6 != 1 && v % 6 != 3)) {
    fail(Errc::inadmissible_v, "v = " + std::to_string(v) + ": Steiner triple systems need v = 1 or 3 (mod 6)");
  }
  check_order_bound(v);
  SteinerSystem s;
  s.v = v;
  s.k = 3;
  s.label = "triple(v=" + std::to_string(v) + ")";

  if (v % 6 == 3) {
    // Bose: points Z_n x {0,1,2} with n = 2t+1, labelled 3i+c.
    // Quasigroup i*j = (t+1)(i+j) mod n is commutative and idempotent.
    const long n = v / 3;
    const long t = (n - 1) / 2;
    auto qg = [n, t](long i, long j) { return ((t + 1) * (i + j)) % n; };
    auto pt = [](long i, long c) { return static_cast<int>(3 * i + c); };
    for (long i = 0; i < n; ++i) s.blocks.push_back({pt(i, 0), pt(i, 1), pt(i, 2)});
    for (long i = 0; i < n; ++i) {
      for (long j = i + 1; j < n; ++j) {
        for (long c = 0; c < 3; ++c) {
          s.blocks.push_back({pt(i, c), pt(j, c), pt(qg(i, j), (c + 1) % 3)});
        }
      }
    }
  } else {
    // Skolem: points (Z_{2n} x {0,1,2}) + infinity with v = 6n+1, labelled
    // 3i+c and infinity = 6n. The half-idempotent commutative quasigroup is
    // the Z_{2n} addition table with symbols renamed so the diagonal reads
    // 0,1,...,n-1,0,1,...,n-1.
    const long n = (v - 1) / 6;
    const long two_n = 2 * n;
    std::vector<long> sigma(two_n, 0);
    for (long k2 = 0; k2 < n; ++k2) {
      sigma[(2 * k2) % two_n] = k2;      // even symbols
      sigma[(2 * k2 + 1) % two_n] = n + k2;  // odd symbols
    }
    auto qg = [&](long i, long j) { return sigma[(i + j) % two_n]; };
    auto pt = [](long i, long c) { return static_cast<int>(3 * i + c); };
    const int inf = static_cast<int>(6 * n);
    for (long i = 0; i < n; ++i) s.blocks.push_back({pt(i, 0), pt(i, 1), pt(i, 2)});
    for (long i = 0; i < n; ++i) {
      for (long c = 0; c < 3; ++c) {
        s.blocks.push_back({inf, pt(n + i, c), pt(i, (c + 1) % 3)});
      }
    }
    for (long i = 0; i < two_n; ++i) {
      for (long j = i + 1; j < two_n; ++j) {
        for (long c = 0; c < 3; ++c) {
          s.blocks.push_back({pt(i, c), pt(j, c), pt(qg(i, j), (c + 1) % 3)});
        }
      }
    }
  }
  sort_blocks(s);
  return s;
}

namespace {

// Vectors over GF(q) indexed lexicographically, coordinate 0 most significant.
std::vector<long> unpack_vector(long idx, int dims, long q) {
  std::vector<long> x(dims, 0);
  for (int i = dims - 1; i >= 0; --i) {
    x[i] = idx % q;
    idx /= q;
  }
  return x;
}

long pack_vector(const std::vector<long>& x, long q) {
  long idx = 0;
  for (long c : x) idx = idx * q + c;
  return idx;
}

// Scale a homogeneous vector so its first nonzero coordinate is 1.
std::vector<long> normalize_projective(const Field& f, std::vector<long> x) {
  for (long c : x) {
    if (c != 0) {
      const long s = f.inv(c);
      for (auto& xi : x) xi = f.mul(xi, s);
      return x;
    }
  }
  return x;  // zero vector, caller filters
}

}  // namespace

SteinerSystem affine_lines(const PrimePower& q, int n) {
  if (n < 2) fail(Errc::bad_argument, "affine geometry needs n >= 2");
  long v = 1;
  for (int i = 0; i < n; ++i) {
    if (v > kOrderBound / q.q) fail(Errc::too_large, "q^n exceeds the configured bound");
    v *= q.q;
  }
  const Field f = Field::make(q);

  SteinerSystem s;
  s.v = v;
  s.k = q.q;
  s.label = "affine(q=" + std::to_string(q.q) + ",n=" + std::to_string(n) + ")";

  // Directions normalized to first nonzero coordinate 1; one line per
  // direction and per coset representative.
  std::vector<char> visited(static_cast<std::size_t>(v), 0);
  for (long didx = 1; didx < v; ++didx) {
    const auto d = unpack_vector(didx, n, q.q);
    bool normalized = false;
    for (long c : d) {
      if (c != 0) {
        normalized = (c == f.one());
        break;
      }
    }
    if (!normalized) continue;
    std::fill(visited.begin(), visited.end(), 0);
    for (long pidx = 0; pidx < v; ++pidx) {
      if (visited[static_cast<std::size_t>(pidx)]) continue;
      const auto base = unpack_vector(pidx, n, q.q);
      std::vector<int> line;
      line.reserve(static_cast<std::size_t>(q.q));
      for (long t = 0; t < q.q; ++t) {
        std::vector<long> pt(n);
        for (int i = 0; i < n; ++i) pt[i] = f.add(base[i], f.mul(t, d[i]));
        const long idx = pack_vector(pt, q.q);
        visited[static_cast<std::size_t>(idx)] = 1;
        line.push_back(static_cast<int>(idx));
      }
      std::sort(line.begin(), line.end());
      s.blocks.push_back(std::move(line));
    }
  }
  sort_blocks(s);
  return s;
}

namespace {

// Enumerate normalized points of PG(dims-1, q) in lexicographic order.
// Returns the point list plus a raw-index -> point-id map.
std::pair<std::vector<std::vector<long>>, std::unordered_map<long, int>> projective_points(
    const Field& f, int dims) {
  std::vector<std::vector<long>> pts;
  std::unordered_map<long, int> id;
  long total = 1;
  for (int i = 0; i < dims; ++i) total *= f.q();
  for (long idx = 1; idx < total; ++idx) {
    auto x = unpack_vector(idx, dims, f.q());
    bool norm = false;
    for (long c : x) {
      if (c != 0) {
        norm = (c == f.one());
        break;
      }
    }
    if (!norm) continue;
    id.emplace(idx, static_cast<int>(pts.size()));
    pts.push_back(std::move(x));
  }
  return {std::move(pts), std::move(id)};
}

}  // namespace

SteinerSystem projective_lines(const PrimePower& q, int n) {
  if (n < 2) fail(Errc::bad_argument, "projective geometry needs n >= 2");
  long v = 0, power = 1;
  for (int i = 0; i <= n; ++i) {
    v += power;
    if (power > kOrderBound / q.q) fail(Errc::too_large, "projective order exceeds the configured bound");
    power *= q.q;
  }
  check_order_bound(v);
  const Field f = Field::make(q);
  const int dims = n + 1;
  auto [pts, id] = projective_points(f, dims);

  SteinerSystem s;
  s.v = v;
  s.k = q.q + 1;
  s.label = "projective(q=" + std::to_string(q.q) + ",n=" + std::to_string(n) + ")";

  std::set<std::vector<int>> lines;
  const int np = static_cast<int>(pts.size());
  for (int a = 0; a < np; ++a) {
    for (int b = a + 1; b < np; ++b) {
      std::vector<int> line;
      line.reserve(static_cast<std::size_t>(q.q + 1));
      line.push_back(b);
      for (long t = 0; t < q.q; ++t) {
        std::vector<long> x(dims);
        for (int i = 0; i < dims; ++i) x[i] = f.add(pts[a][i], f.mul(t, pts[b][i]));
        x = normalize_projective(f, std::move(x));
        line.push_back(id.at(pack_vector(x, f.q())));
      }
      std::sort(line.begin(), line.end());
      lines.insert(std::move(line));
    }
  }
  s.blocks.assign(lines.begin(), lines.end());
  return s;
}

SteinerSystem hermitian_unital(const PrimePower& q) {
  const long v = q.q * q.q * q.q + 1;
  check_order_bound(v);
  // The curve lives in PG(2, q^2).
  const Field f = Field::make(q.p, 2 * q.m);
  auto [pts, id] = projective_points(f, 3);

  auto on_curve = [&](const std::vector<long>& x) {
    long sum = f.zero();
    for (long c : x) sum = f.add(sum, f.pow(c, q.q + 1));
    return sum == f.zero();
  };

  std::vector<int> curve;           // point ids in PG enumeration order
  std::unordered_map<int, int> uid;  // PG point id -> unital point index
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    if (on_curve(pts[i])) {
      uid.emplace(i, static_cast<int>(curve.size()));
      curve.push_back(i);
    }
  }
  if (static_cast<long>(curve.size()) != v) {
    fail(Errc::invalid_design, "Hermitian curve has unexpected point count");
  }

  SteinerSystem s;
  s.v = v;
  s.k = q.q + 1;
  s.label = "unital(q=" + std::to_string(q.q) + ")";

  // Every pair of curve points spans a secant line meeting the curve in
  // q+1 points; collect each such intersection once.
  std::set<std::vector<int>> blocks;
  const int nc = static_cast<int>(curve.size());
  for (int a = 0; a < nc; ++a) {
    for (int b = a + 1; b < nc; ++b) {
      std::vector<int> blk;
      blk.push_back(uid.at(curve[b]));
      const auto& xa = pts[curve[a]];
      const auto& xb = pts[curve[b]];
      for (long t = 0; t < f.q(); ++t) {
        std::vector<long> x(3);
        for (int i = 0; i < 3; ++i) x[i] = f.add(xa[i], f.mul(t, xb[i]));
        x = normalize_projective(f, std::move(x));
        const int pg_id = id.at(pack_vector(x, f.q()));
        auto it = uid.find(pg_id);
        if (it != uid.end()) blk.push_back(it->second);
      }
      std::sort(blk.begin(), blk.end());
      blocks.insert(std::move(blk));
    }
  }
  s.blocks.assign(blocks.begin(), blocks.end());
  return s;
}

DesignCheck verify_design(const SteinerSystem& s) {
  DesignCheck out;
  const long v = s.v, k = s.k, b = s.b();
  if (v < 2 || k < 2 || k > v) {
    out.detail = "degenerate parameters";
    return out;
  }

  const long r_num = v - 1, r_den = k - 1;
  const long b_num = v * (v - 1), b_den = k * (k - 1);
  out.size_ok = (r_num % r_den == 0) && (b_num % b_den == 0) && (b == b_num / b_den);
  if (!out.size_ok) {
    out.detail = "b = " + std::to_string(b) + " does not match v(v-1)/(k(k-1))";
  }
  const long r = r_num / r_den;

  out.row_counts_ok = true;
  for (std::size_t i = 0; i < s.blocks.size() && out.row_counts_ok; ++i) {
    const auto& blk = s.blocks[i];
    if (static_cast<long>(blk.size()) != k) {
      out.row_counts_ok = false;
      out.detail = "block " + std::to_string(i) + " has size " + std::to_string(blk.size());
      break;
    }
    for (std::size_t j = 0; j < blk.size(); ++j) {
      if (blk[j] < 0 || blk[j] >= v || (j > 0 && blk[j] <= blk[j - 1])) {
        out.row_counts_ok = false;
        out.detail = "block " + std::to_string(i) + " has repeated or out-of-range points";
        break;
      }
    }
  }

  std::vector<long> point_count(static_cast<std::size_t>(v), 0);
  for (const auto& blk : s.blocks) {
    for (int p : blk) {
      if (p >= 0 && p < v) ++point_count[static_cast<std::size_t>(p)];
    }
  }
  out.col_counts_ok = true;
  for (long p = 0; p < v; ++p) {
    if (point_count[static_cast<std::size_t>(p)] != r) {
      out.col_counts_ok = false;
      if (out.detail.empty()) {
        out.detail = "point " + std::to_string(p) + " lies in " +
                     std::to_string(point_count[static_cast<std::size_t>(p)]) + " blocks, expected " +
                     std::to_string(r);
      }
      break;
    }
  }

  // Full pair scan: lambda = 1 exactly.
  std::vector<int> pair_count(static_cast<std::size_t>(v) * static_cast<std::size_t>(v), 0);
  out.pair_once_ok = true;
  for (const auto& blk : s.blocks) {
    for (std::size_t i = 0; i < blk.size(); ++i) {
      for (std::size_t j = i + 1; j < blk.size(); ++j) {
        ++pair_count[static_cast<std::size_t>(blk[i]) * static_cast<std::size_t>(v) + blk[j]];
      }
    }
  }
  for (long i = 0; i < v && out.pair_once_ok; ++i) {
    for (long j = i + 1; j < v; ++j) {
      const int c = pair_count[static_cast<std::size_t>(i) * static_cast<std::size_t>(v) + j];
      if (c != 1) {
        out.pair_once_ok = false;
        if (out.detail.empty()) {
          out.detail = "pair {" + std::to_string(i) + "," + std::to_string(j) + "} covered " +
                       std::to_string(c) + " times";
        }
        break;
      }
    }
  }

  out.identities_ok = (v * r == b * k) && (r * (k - 1) == v - 1);
  if (!out.identities_ok && out.detail.empty()) out.detail = "vr = bk or r(k-1) = v-1 violated";

  out.pass = out.size_ok && out.row_counts_ok && out.col_counts_ok && out.pair_once_ok && out.identities_ok;
  return out;
}

IncidenceMatrixT incidence_transpose(const SteinerSystem& s) {
  const auto check = verify_design(s);
  if (!check.pass) fail(Errc::invalid_design, "not a (2,k,v)-Steiner system: " + check.detail);
  IncidenceMatrixT m;
  m.rows = s.b();
  m.cols = s.v;
  m.row_points = s.blocks;
  return m;
}

}  // namespace etf
