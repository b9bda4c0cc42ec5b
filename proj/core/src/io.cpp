#include "etf/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "etf/error.hpp"

namespace etf::io {

namespace {

using nlohmann::ordered_json;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string strip_mtx(const std::string& path) {
  if (path.size() > 4 && path.substr(path.size() - 4) == ".mtx") return path.substr(0, path.size() - 4);
  return path;
}

}  // namespace

Sidecar sidecar_for(const EtfMatrix& f) {
  Sidecar meta;
  meta.M = f.rows;
  meta.N = f.cols;
  meta.scale_num = f.scale_num;
  meta.scale_den = f.scale_den;
  meta.real = f.all_real();
  const auto params = compute_params(f);
  meta.alpha = params.alpha;
  meta.density = params.density.to_double();
  long den = 1;
  for (const auto& col : f.columns) {
    for (const auto& e : col) den = std::lcm(den, static_cast<long>(e.phase.den));
  }
  meta.phase_den = den;
  if (f.provenance) {
    const auto& s = f.provenance->system;
    meta.v = s.v;
    meta.k = s.k;
    meta.r = s.r();
    meta.family = s.label;
    meta.omit_row = std::max(0, f.provenance->omitted_row);
  }
  return meta;
}

namespace {

ordered_json sidecar_to_json(const Sidecar& m) {
  ordered_json j;
  j["format"] = "etf-forge/1";
  j["M"] = m.M;
  j["N"] = m.N;
  if (m.v) j["v"] = *m.v;
  if (m.k) j["k"] = *m.k;
  if (m.r) j["r"] = *m.r;
  j["alpha"] = m.alpha;
  j["density"] = m.density;
  j["real"] = m.real;
  j["family"] = m.family;
  j["scale_num"] = m.scale_num;
  j["scale_den"] = m.scale_den;
  j["phase_den"] = m.phase_den;
  j["omit_row"] = m.omit_row;
  j["flat_kind"] = m.flat_kind;
  j["prefer_real"] = m.prefer_real;
  if (!m.fam_name.empty()) {
    ordered_json g;
    g["name"] = m.fam_name;
    if (m.fam_v) g["v"] = *m.fam_v;
    if (m.fam_q) g["q"] = *m.fam_q;
    if (m.fam_n) g["n"] = *m.fam_n;
    j["generator"] = g;
  }
  return j;
}

Sidecar sidecar_from_json(const ordered_json& j) {
  Sidecar m;
  m.M = j.at("M").get<long>();
  m.N = j.at("N").get<long>();
  if (j.contains("v")) m.v = j["v"].get<long>();
  if (j.contains("k")) m.k = j["k"].get<long>();
  if (j.contains("r")) m.r = j["r"].get<long>();
  m.alpha = j.value("alpha", 0.0);
  m.density = j.value("density", 0.0);
  m.real = j.value("real", false);
  m.family = j.value("family", std::string{});
  m.scale_num = j.value("scale_num", 1L);
  m.scale_den = j.value("scale_den", 1L);
  m.phase_den = j.value("phase_den", 0L);
  m.omit_row = j.value("omit_row", 0);
  m.flat_kind = j.value("flat_kind", std::string{"auto"});
  m.prefer_real = j.value("prefer_real", true);
  if (j.contains("generator")) {
    const auto& g = j["generator"];
    m.fam_name = g.value("name", std::string{});
    if (g.contains("v")) m.fam_v = g["v"].get<long>();
    if (g.contains("q")) m.fam_q = g["q"].get<long>();
    if (g.contains("n")) m.fam_n = g["n"].get<int>();
  }
  return m;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot open " + path + " for writing");
  out << text;
  if (!out) fail(Errc::io_error, "write failed: " + path);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct MmEntry {
  int row, col;
  Complex value;
};

std::string render_mtx(int rows, int cols, std::vector<MmEntry> entries, bool real) {
  std::sort(entries.begin(), entries.end(), [](const MmEntry& a, const MmEntry& b) {
    if (a.col != b.col) return a.col < b.col;
    return a.row < b.row;
  });
  std::ostringstream os;
  os << "%%MatrixMarket matrix coordinate " << (real ? "real" : "complex") << " general\n";
  os << rows << ' ' << cols << ' ' << entries.size() << '\n';
  for (const auto& e : entries) {
    os << (e.row + 1) << ' ' << (e.col + 1) << ' ' << fmt17(e.value.real());
    if (!real) os << ' ' << fmt17(e.value.imag());
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string save_frame(const std::string& prefix, const EtfMatrix& f, const Sidecar& meta) {
  std::vector<MmEntry> entries;
  entries.reserve(static_cast<std::size_t>(f.nonzeros()));
  const double s = f.scale();
  for (int n = 0; n < f.cols; ++n) {
    for (const auto& e : f.columns[static_cast<std::size_t>(n)]) {
      entries.push_back({e.row, n, s * e.phase.value()});
    }
  }
  const std::string base = strip_mtx(prefix);
  write_text(base + ".mtx", render_mtx(f.rows, f.cols, std::move(entries), f.all_real()));
  write_text(base + ".json", sidecar_to_json(meta).dump(2) + "\n");
  return base + ".mtx";
}

std::string save_frame(const std::string& prefix, const FrameMatrix& f, const Sidecar& meta) {
  const bool real = f.is_real();
  std::vector<MmEntry> entries;
  for (int j = 0; j < f.cols; ++j) {
    for (int i = 0; i < f.rows; ++i) {
      const Complex z = f.at(i, j);
      if (std::abs(z) > 1e-14) entries.push_back({i, j, z});
    }
  }
  const std::string base = strip_mtx(prefix);
  write_text(base + ".mtx", render_mtx(f.rows, f.cols, std::move(entries), real));
  write_text(base + ".json", sidecar_to_json(meta).dump(2) + "\n");
  return base + ".mtx";
}

LoadedFrame load_frame(const std::string& path) {
  const std::string base = strip_mtx(path);
  LoadedFrame out;

  ordered_json j;
  try {
    j = ordered_json::parse(read_text(base + ".json"));
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::io_error, std::string("bad sidecar: ") + e.what());
  }
  out.meta = sidecar_from_json(j);

  std::istringstream in(read_text(base + ".mtx"));
  std::string header;
  std::getline(in, header);
  if (header.rfind("%%MatrixMarket", 0) != 0) fail(Errc::io_error, "not a Matrix Market file");
  const bool complex_file = header.find("complex") != std::string::npos;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '%') break;
  }
  int rows = 0, cols = 0;
  long long nnz = 0;
  {
    std::istringstream hs(line);
    if (!(hs >> rows >> cols >> nnz)) fail(Errc::io_error, "bad size line");
  }
  out.frame = FrameMatrix::zero(rows, cols);

  struct RawEntry {
    int row, col;
    Complex value;
  };
  std::vector<RawEntry> raw;
  raw.reserve(static_cast<std::size_t>(nnz));
  for (long long t = 0; t < nnz; ++t) {
    int i = 0, jcol = 0;
    double re = 0, im = 0;
    if (!(in >> i >> jcol >> re)) fail(Errc::io_error, "truncated matrix data");
    if (complex_file && !(in >> im)) fail(Errc::io_error, "truncated complex entry");
    if (i < 1 || i > rows || jcol < 1 || jcol > cols) fail(Errc::io_error, "entry out of range");
    out.frame.at(i - 1, jcol - 1) = Complex{re, im};
    raw.push_back({i - 1, jcol - 1, Complex{re, im}});
  }

  // Exact reconstruction: every entry must be scale times a root of unity
  // with the recorded common denominator.
  if (out.meta.phase_den > 0 && out.meta.scale_den > 0) {
    const double s =
        std::sqrt(static_cast<double>(out.meta.scale_num) / static_cast<double>(out.meta.scale_den));
    EtfMatrix etf;
    etf.rows = rows;
    etf.cols = cols;
    etf.scale_num = out.meta.scale_num;
    etf.scale_den = out.meta.scale_den;
    etf.columns.assign(static_cast<std::size_t>(cols), {});
    if (out.meta.r && *out.meta.r > 0) etf.block_cols = static_cast<int>(*out.meta.r) + 1;
    bool exact = true;
    for (const auto& e : raw) {
      const Complex unit = e.value / s;
      const double angle = std::arg(unit);
      const long den = out.meta.phase_den;
      long num = static_cast<long>(std::llround(angle * den / (2.0 * std::numbers::pi)));
      const Phase p = Phase::of(num, den);
      if (std::abs(p.value() * s - e.value) > 1e-9 * s) {
        exact = false;
        break;
      }
      etf.columns[static_cast<std::size_t>(e.col)].push_back({e.row, p});
    }
    if (exact) {
      for (auto& col : etf.columns) {
        std::sort(col.begin(), col.end(),
                  [](const EtfMatrix::Entry& a, const EtfMatrix::Entry& b) { return a.row < b.row; });
      }
      out.etf = std::move(etf);
    }
  }
  return out;
}

std::string design_to_json(const SteinerSystem& s) {
  ordered_json j;
  j["v"] = s.v;
  j["k"] = s.k;
  j["blocks"] = s.blocks;
  return j.dump(2) + "\n";
}

SteinerSystem design_from_json_text(const std::string& text) {
  SteinerSystem s;
  try {
    const auto j = ordered_json::parse(text);
    s.v = j.at("v").get<long>();
    s.k = j.at("k").get<long>();
    s.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::io_error, std::string("bad design json: ") + e.what());
  }
  s.label = "imported";
  for (auto& blk : s.blocks) std::sort(blk.begin(), blk.end());
  std::sort(s.blocks.begin(), s.blocks.end());
  return s;
}

void save_design(const std::string& path, const SteinerSystem& s) { write_text(path, design_to_json(s)); }

SteinerSystem load_design(const std::string& path) { return design_from_json_text(read_text(path)); }

std::string rip_report_json(const RipReport& rep) {
  ordered_json j;
  j["K"] = rep.K;
  j["delta_lower"] = rep.delta_lower;
  if (rep.delta_exact) j["delta_exact"] = *rep.delta_exact;
  j["exact"] = rep.delta_exact.has_value();
  j["witness"] = rep.witness;
  j["method"] = rep.method;
  j["subsets"] = rep.subsets;
  if (rep.seed) j["seed"] = *rep.seed;
  if (rep.sigma_min >= 0) j["sigma_min"] = rep.sigma_min;
  if (rep.dependency_residual >= 0) j["dependency_residual"] = rep.dependency_residual;
  return j.dump(2) + "\n";
}

EtfMatrix regenerate(const Sidecar& meta) {
  if (meta.fam_name.empty()) fail(Errc::no_provenance, "no generator metadata in sidecar");
  SteinerSystem s;
  if (meta.fam_name == "pair") {
    s = pair_design(meta.fam_v.value());
  } else if (meta.fam_name == "triple") {
    s = steiner_triple(meta.fam_v.value());
  } else if (meta.fam_name == "affine") {
    s = affine_lines(PrimePower::factor(meta.fam_q.value()), meta.fam_n.value());
  } else if (meta.fam_name == "projective") {
    s = projective_lines(PrimePower::factor(meta.fam_q.value()), meta.fam_n.value());
  } else if (meta.fam_name == "unital") {
    s = hermitian_unital(PrimePower::factor(meta.fam_q.value()));
  } else {
    fail(Errc::no_provenance, "unknown generator family: " + meta.fam_name);
  }
  const int order = static_cast<int>(s.r()) + 1;
  FlatMatrix h;
  if (meta.flat_kind == "dft") {
    h = dft_matrix(order);
  } else if (meta.flat_kind == "sylvester") {
    int t = 0;
    while ((1 << t) < order) ++t;
    if ((1 << t) != order) fail(Errc::order_mismatch, "order is not a power of 2");
    h = sylvester(t);
  } else if (meta.flat_kind == "paley") {
    h = paley_hadamard(static_cast<long>(order) - 1);
  } else {
    h = best_flat(order, meta.prefer_real);
  }
  return assemble_etf(s, {h}, {}, meta.omit_row);
}

}  // namespace etf::io
