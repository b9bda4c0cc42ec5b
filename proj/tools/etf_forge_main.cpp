// etf-forge: construct Steiner equiangular tight frames, verify their
// properties, recover design parameters, enumerate the family catalog and
// measure restricted-isometry behavior.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <json.hpp>

#include "etf/design.hpp"
#include "etf/etf.hpp"
#include "etf/io.hpp"
#include "etf/params.hpp"
#include "etf/rip.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParam = 2;
constexpr int kExitVerify = 3;
constexpr int kExitIo = 4;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

int exit_code_for(const etf::Error& e) {
  switch (e.code()) {
    case etf::Errc::io_error:
      return kExitIo;
    case etf::Errc::not_tight:
    case etf::Errc::invalid_design:
      return kExitVerify;
    default:
      return kExitParam;
  }
}

struct FamilySpec {
  std::string family;
  long v = 0;
  long q = 0;
  int n = 0;
};

etf::SteinerSystem build_design(const FamilySpec& spec) {
  if (spec.family == "pair") return etf::pair_design(spec.v);
  if (spec.family == "triple") return etf::steiner_triple(spec.v);
  if (spec.family == "affine") return etf::affine_lines(etf::PrimePower::factor(spec.q), spec.n);
  if (spec.family == "projective") return etf::projective_lines(etf::PrimePower::factor(spec.q), spec.n);
  if (spec.family == "unital") return etf::hermitian_unital(etf::PrimePower::factor(spec.q));
  etf::fail(etf::Errc::bad_argument, "unknown family: " + spec.family +
                                         " (expected pair|triple|affine|projective|unital)");
}

etf::FlatMatrix build_flat(const std::string& kind, int order, bool prefer_real) {
  if (kind == "dft") return etf::dft_matrix(order);
  if (kind == "sylvester") {
    int t = 0;
    while ((1 << t) < order) ++t;
    if ((1 << t) != order) {
      etf::fail(etf::Errc::order_mismatch, "sylvester needs a power-of-2 order, got " + std::to_string(order));
    }
    return etf::sylvester(t);
  }
  if (kind == "paley") return etf::paley_hadamard(static_cast<long>(order) - 1);
  if (kind == "auto") return etf::best_flat(order, prefer_real);
  etf::fail(etf::Errc::bad_argument, "unknown flat kind: " + kind);
}

void print_params_line(const etf::EtfMatrix& f, const etf::SteinerSystem& s, bool real) {
  const auto p = etf::compute_params(f);
  std::cout << "M=" << p.M << " N=" << p.N << " k=" << s.k << " v=" << s.v << " r=" << s.r()
            << " A=" << p.frame_bound.str() << " alpha=" << fmt17(p.alpha)
            << " density=" << p.density.str() << " redundancy=" << p.redundancy.str() << " "
            << (real ? "real" : "complex") << "\n";
}

int resolve_threads(int cli_threads) {
  if (cli_threads > 0) return cli_threads;
  if (const char* env = std::getenv("ETF_FORGE_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

struct VerifyOutcome {
  bool ok = true;
  std::string detail;
};

VerifyOutcome run_verification(const etf::io::LoadedFrame& loaded, double tol, int threads) {
  VerifyOutcome out;
  const auto& meta = loaded.meta;

  etf::TightReport tight;
  etf::EquiangularReport eq;
  if (loaded.etf) {
    tight = etf::verify_tight(*loaded.etf, tol);
    eq = etf::verify_equiangular(*loaded.etf, tol, threads);
  } else {
    tight = etf::verify_tight(loaded.frame, tol);
    eq = etf::verify_equiangular(loaded.frame, tol);
  }
  std::cout << "tight: " << (tight.pass ? "pass" : "FAIL") << " (max offdiag " << fmt17(tight.max_offdiag)
            << ", max diag dev " << fmt17(tight.max_diag_dev) << ")";
  if (tight.exact_integer_mode) {
    std::cout << " [exact integer check " << (tight.exact_integer_pass ? "pass" : "FAIL") << "]";
  }
  std::cout << "\n";
  std::cout << "equiangular: " << (eq.pass ? "pass" : "FAIL") << " (alpha " << fmt17(eq.alpha)
            << ", max deviation " << fmt17(eq.max_dev) << ")\n";
  if (!tight.pass || !eq.pass) {
    out.ok = false;
    const auto& viol = tight.first_violation ? tight.first_violation : eq.first_violation;
    if (viol) {
      out.detail = "first counterexample at indices (" + std::to_string(viol->first) + ", " +
                   std::to_string(viol->second) + ")";
    }
  }

  // Density and Welch-bound comparison.
  if (loaded.etf && meta.v && meta.k) {
    const long nnz = loaded.etf->nonzeros();
    const bool density_ok = nnz * *meta.v == *meta.k * static_cast<long>(meta.M) * meta.N;
    std::cout << "density: " << (density_ok ? "pass" : "FAIL") << " (" << nnz << " nonzeros, k/v = "
              << *meta.k << "/" << *meta.v << ")\n";
    out.ok = out.ok && density_ok;
  }
  const double mu = loaded.etf ? etf::coherence(*loaded.etf) : etf::coherence(loaded.frame);
  const double welch = eq.alpha;
  const bool welch_ok = std::abs(mu - welch) <= tol * std::max(1.0, welch);
  std::cout << "welch: " << (welch_ok ? "pass" : "FAIL") << " (coherence " << fmt17(mu)
            << ", bound " << fmt17(welch) << ")\n";
  out.ok = out.ok && welch_ok;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steiner equiangular tight frame toolkit"};
  app.require_subcommand(1);
  int threads_flag = 0;
  app.add_option("--threads", threads_flag, "worker threads (default 1; env ETF_FORGE_THREADS)");

  // generate
  auto* gen = app.add_subcommand("generate", "construct an ETF from a design family");
  FamilySpec spec;
  gen->add_option("--family", spec.family, "pair|triple|affine|projective|unital")->required();
  gen->add_option("--v", spec.v, "point count (pair, triple)");
  gen->add_option("--q", spec.q, "prime power (affine, projective, unital)");
  gen->add_option("--n", spec.n, "geometry dimension (affine, projective)");
  bool prefer_real = true, force_complex = false;
  gen->add_flag("--prefer-real", prefer_real, "prefer a real Hadamard matrix when one is constructible");
  gen->add_flag("--complex", force_complex, "force the DFT matrix");
  std::string flat_kind = "auto";
  gen->add_option("--flat", flat_kind, "auto|dft|sylvester|paley");
  std::string flats_file;
  gen->add_option("--flats", flats_file, "JSON file with per-point flat overrides");
  int omit_row = 0;
  gen->add_option("--omit-row", omit_row, "flat-matrix row left unused (default 0)");
  std::string gen_out;
  gen->add_option("--out", gen_out, "output prefix (writes PREFIX.mtx and PREFIX.json)");

  // verify
  auto* ver = app.add_subcommand("verify", "check tightness, equiangularity, density and the Welch bound");
  std::string ver_path;
  ver->add_option("path", ver_path, "matrix file or prefix")->required();
  double ver_tol = 1e-9;
  ver->add_option("--tol", ver_tol, "verification tolerance (default 1e-9)");

  // params
  auto* par = app.add_subcommand("params", "recover design parameters from frame dimensions");
  long par_m = 0, par_n = 0;
  par->add_option("M", par_m)->required();
  par->add_option("N", par_n)->required();

  // admissible
  auto* adm = app.add_subcommand("admissible", "admissibility verdict for a (k, v) pair");
  long adm_k = 0, adm_v = 0;
  adm->add_option("k", adm_k)->required();
  adm->add_option("v", adm_v)->required();

  // table
  auto* tab = app.add_subcommand("table", "enumerate the family catalog");
  long max_m = 100;
  tab->add_option("--max-m", max_m, "largest dimension M (default 100)");
  std::string tab_format = "text";
  tab->add_option("--format", tab_format, "text|csv");
  std::string tab_out;
  tab->add_option("--out", tab_out, "write to file instead of stdout");

  // rip
  auto* rip = app.add_subcommand("rip", "restricted isometry constant over K-subsets");
  std::string rip_path;
  rip->add_option("path", rip_path)->required();
  int rip_k = 2;
  rip->add_option("--k", rip_k, "sparsity level K")->required();
  std::uint64_t rip_budget = 2'000'000;
  rip->add_option("--budget", rip_budget, "max subsets for exhaustive mode");
  std::uint64_t rip_samples = 100'000;
  rip->add_option("--samples", rip_samples, "sampled subsets when over budget");
  std::uint64_t rip_seed = 0x5EED;
  rip->add_option("--seed", rip_seed, "sampling seed");
  bool rip_early = false;
  rip->add_flag("--early-exit", rip_early, "stop once delta >= 1 is witnessed");
  std::string rip_out;
  rip->add_option("--out", rip_out, "write the JSON report to a file");

  // certificate
  auto* cert = app.add_subcommand("certificate", "block dependency certificate (delta >= 1 witness)");
  std::string cert_path;
  cert->add_option("path", cert_path)->required();
  std::string cert_out;
  cert->add_option("--out", cert_out, "write the JSON report to a file");

  // complement
  auto* comp = app.add_subcommand("complement", "Naimark complement of a tight frame");
  std::string comp_path, comp_out;
  comp->add_option("path", comp_path)->required();
  comp->add_option("--out", comp_out, "output prefix")->required();

  // export / import of design block lists
  auto* exp = app.add_subcommand("export", "write a design as canonical JSON");
  FamilySpec exp_spec;
  exp->add_option("--family", exp_spec.family, "pair|triple|affine|projective|unital")->required();
  exp->add_option("--v", exp_spec.v);
  exp->add_option("--q", exp_spec.q);
  exp->add_option("--n", exp_spec.n);
  std::string exp_out;
  exp->add_option("--out", exp_out, "output JSON path")->required();

  auto* imp = app.add_subcommand("import", "read a design JSON, verify it, optionally build its ETF");
  std::string imp_path;
  imp->add_option("path", imp_path)->required();
  std::string imp_etf_out;
  imp->add_option("--etf-out", imp_etf_out, "assemble the ETF and write it to this prefix");
  bool imp_prefer_real = true;
  imp->add_flag("--prefer-real", imp_prefer_real);

  CLI11_PARSE(app, argc, argv);
  const int threads = resolve_threads(threads_flag);

  try {
    if (*gen) {
      const auto system = build_design(spec);
      const int order = static_cast<int>(system.r()) + 1;
      const bool want_real = !force_complex && prefer_real;
      std::vector<etf::FlatMatrix> flats;
      std::string used_kind = force_complex ? "dft" : flat_kind;
      if (!flats_file.empty()) {
        // Per-point overrides: {"default": "auto", "overrides": {"3": "dft"}}
        std::ifstream in(flats_file);
        if (!in) etf::fail(etf::Errc::io_error, "cannot open " + flats_file);
        nlohmann::json j;
        in >> j;
        const std::string def = j.value("default", used_kind);
        flats.assign(static_cast<std::size_t>(system.v), build_flat(def, order, want_real));
        if (j.contains("overrides")) {
          for (const auto& [key, val] : j["overrides"].items()) {
            const long idx = std::stol(key);
            if (idx < 0 || idx >= system.v) etf::fail(etf::Errc::bad_argument, "override index out of range");
            flats[static_cast<std::size_t>(idx)] = build_flat(val.get<std::string>(), order, want_real);
          }
        }
      } else {
        flats.push_back(build_flat(used_kind, order, want_real));
      }
      const auto f = etf::assemble_etf(system, flats, {}, omit_row);
      const bool real = f.all_real();
      print_params_line(f, system, real);
      if (!real && want_real && used_kind == "auto" && flats_file.empty()) {
        std::cout << "note: no real Hadamard matrix of order " << order
                  << " is constructible here; complex fallback used\n";
      }
      if (gen_out.empty()) {
        gen_out = spec.family + (spec.v ? "-v" + std::to_string(spec.v) : "") +
                  (spec.q ? "-q" + std::to_string(spec.q) : "") +
                  (spec.n ? "-n" + std::to_string(spec.n) : "");
      }
      auto meta = etf::io::sidecar_for(f);
      meta.flat_kind = used_kind;
      meta.prefer_real = want_real;
      meta.omit_row = omit_row;
      meta.fam_name = spec.family;
      if (spec.v) meta.fam_v = spec.v;
      if (spec.q) meta.fam_q = spec.q;
      if (spec.n) meta.fam_n = spec.n;
      const auto mtx = etf::io::save_frame(gen_out, f, meta);
      // In-process self-check of the assembled frame.
      const auto tight = etf::verify_tight(f);
      const auto eq = etf::verify_equiangular(f, 1e-9, threads);
      if (!tight.pass || !eq.pass) {
        std::cerr << "self-check failed on the assembled frame\n";
        return kExitVerify;
      }
      std::cout << "wrote " << mtx << " and sidecar (self-check pass)\n";
      return kExitOk;
    }

    if (*ver) {
      const auto loaded = etf::io::load_frame(ver_path);
      const auto outcome = run_verification(loaded, ver_tol, threads);
      if (!outcome.ok) {
        if (!outcome.detail.empty()) std::cerr << outcome.detail << "\n";
        return kExitVerify;
      }
      std::cout << "all checks passed\n";
      return kExitOk;
    }

    if (*par) {
      const auto rec = etf::recover_design_params(par_m, par_n);
      if (!rec.steiner) {
        std::cout << "NotSteiner: ";
        if (rec.alpha) {
          std::cout << "v=" << rec.v.str() << ", b=" << rec.b.str() << ", r=" << rec.r.str()
                    << ", k=" << rec.k.str() << " (" << rec.reason << ")\n";
        } else {
          std::cout << rec.reason << "\n";
        }
        return kExitOk;
      }
      std::cout << "v=" << rec.v.str() << " b=" << rec.b.str() << " r=" << rec.r.str()
                << " k=" << rec.k.str() << " alpha^2=" << rec.alpha_sq.str() << "\n";
      const auto verdict =
          etf::admissible(std::stoll(rec.k.num().str()), std::stoll(rec.v.num().str()));
      std::cout << "admissibility: " << etf::admissibility_name(verdict.kind);
      if (!verdict.witness.empty()) std::cout << " (" << verdict.witness << ")";
      if (!verdict.note.empty()) std::cout << " [" << verdict.note << "]";
      std::cout << "\n";
      return kExitOk;
    }

    if (*adm) {
      const auto verdict = etf::admissible(adm_k, adm_v);
      std::cout << etf::admissibility_name(verdict.kind);
      if (!verdict.witness.empty()) std::cout << " (" << verdict.witness << ")";
      if (!verdict.note.empty()) std::cout << " [" << verdict.note << "]";
      std::cout << "\n";
      return kExitOk;
    }

    if (*tab) {
      const auto rows = etf::enumerate_families(max_m);
      const auto text = tab_format == "csv" ? etf::render_table_csv(rows) : etf::render_table_text(rows);
      if (tab_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(tab_out, std::ios::binary);
        if (!out) etf::fail(etf::Errc::io_error, "cannot open " + tab_out);
        out << text;
      }
      return kExitOk;
    }

    if (*rip) {
      const auto loaded = etf::io::load_frame(rip_path);
      etf::RicOptions opts;
      opts.budget = rip_budget;
      opts.samples = rip_samples;
      opts.seed = rip_seed;
      opts.early_exit_on_one = rip_early;
      opts.threads = threads;
      const auto frame = loaded.etf ? loaded.etf->dense() : loaded.frame;
      const auto rep = etf::ric_exhaustive(frame, rip_k, opts);
      const auto text = etf::io::rip_report_json(rep);
      if (rip_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(rip_out, std::ios::binary);
        out << text;
      }
      return kExitOk;
    }

    if (*cert) {
      const auto loaded = etf::io::load_frame(cert_path);
      etf::EtfMatrix f;
      if (loaded.etf && loaded.etf->provenance) {
        f = *loaded.etf;
      } else {
        // Rebuild provenance from generator metadata and make sure the file
        // really is that matrix.
        f = etf::io::regenerate(loaded.meta);
        const auto a = f.dense();
        for (int i = 0; i < a.rows; ++i) {
          for (int j = 0; j < a.cols; ++j) {
            if (std::abs(a.at(i, j) - loaded.frame.at(i, j)) > 1e-9) {
              etf::fail(etf::Errc::no_provenance, "file does not match its generator metadata");
            }
          }
        }
      }
      const auto rep = etf::block_dependency_certificate(f);
      const auto text = etf::io::rip_report_json(rep);
      if (cert_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(cert_out, std::ios::binary);
        out << text;
      }
      return kExitOk;
    }

    if (*comp) {
      const auto loaded = etf::io::load_frame(comp_path);
      const auto result = loaded.etf ? etf::naimark_complement(*loaded.etf)
                                     : etf::naimark_complement(loaded.frame);
      etf::io::Sidecar meta;
      meta.M = result.rows;
      meta.N = result.cols;
      meta.family = "naimark-complement(" + loaded.meta.family + ")";
      meta.real = result.is_real(1e-9);
      meta.phase_den = 0;
      const long m = result.rows, n = result.cols;
      meta.alpha = std::sqrt(static_cast<double>(n - m) / (static_cast<double>(m) * (n - 1)));
      meta.density = 1.0;
      const auto mtx = etf::io::save_frame(comp_out, result, meta);
      std::cout << "wrote " << mtx << " (" << result.rows << "x" << result.cols
                << ", alpha=" << fmt17(meta.alpha) << ")\n";
      return kExitOk;
    }

    if (*exp) {
      const auto system = build_design(exp_spec);
      etf::io::save_design(exp_out, system);
      std::cout << "wrote " << exp_out << " (v=" << system.v << ", k=" << system.k
                << ", b=" << system.b() << ")\n";
      return kExitOk;
    }

    if (*imp) {
      const auto system = etf::io::load_design(imp_path);
      const auto check = etf::verify_design(system);
      std::cout << "v=" << system.v << " k=" << system.k << " b=" << system.b() << " verify: "
                << (check.pass ? "pass" : ("FAIL (" + check.detail + ")")) << "\n";
      if (!check.pass) return kExitVerify;
      if (!imp_etf_out.empty()) {
        const auto f = etf::assemble_default(system, imp_prefer_real);
        auto meta = etf::io::sidecar_for(f);
        meta.family = "imported-design";
        etf::io::save_frame(imp_etf_out, f, meta);
        std::cout << "wrote " << imp_etf_out << ".mtx\n";
      }
      return kExitOk;
    }
  } catch (const etf::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParam;
  }
  return kExitParam;
}
