#pragma once

#include <map>
#include <optional>
#include <string>

#include "etf/design.hpp"
#include "etf/etf.hpp"
#include "etf/rip.hpp"

namespace etf::io {

/// Metadata sidecar written next to each .mtx file. Scale is recorded as the
/// exact rational scale^2 = scale_num/scale_den; phase_den is a common
/// denominator of all root-of-unity entries so exact reconstruction can snap
/// imported values.
struct Sidecar {
  long M = 0;
  long N = 0;
  std::optional<long> v, k, r;
  double alpha = 0.0;
  double density = 0.0;
  bool real = false;
  std::string family;  // display label, e.g. "pair(v=4)" or "naimark-complement"
  long scale_num = 1;
  long scale_den = 1;
  long phase_den = 0;  // 0: entries are not roots of unity times scale
  int omit_row = 0;
  std::string flat_kind = "auto";  // auto | dft | sylvester | paley
  bool prefer_real = true;
  // Generator coordinates for provenance-aware commands; empty fam_name
  // means the file cannot be regenerated.
  std::string fam_name;  // pair | triple | affine | projective | unital
  std::optional<long> fam_v, fam_q;
  std::optional<int> fam_n;
};

struct LoadedFrame {
  FrameMatrix frame;
  Sidecar meta;
  std::optional<EtfMatrix> etf;  // exact reconstruction when every entry snapped
};

Sidecar sidecar_for(const EtfMatrix& f);

/// Writes prefix.mtx (Matrix Market coordinate, real or complex) and
/// prefix.json. Returns the .mtx path. Output is byte-deterministic.
std::string save_frame(const std::string& prefix, const EtfMatrix& f, const Sidecar& meta);
std::string save_frame(const std::string& prefix, const FrameMatrix& f, const Sidecar& meta);

/// Accepts either the .mtx path or the bare prefix; expects the sidecar next
/// to the matrix file.
LoadedFrame load_frame(const std::string& path);

/// Canonical design serialization: {"v": ..., "k": ..., "blocks": [[...]]}.
std::string design_to_json(const SteinerSystem& s);
SteinerSystem design_from_json_text(const std::string& text);
void save_design(const std::string& path, const SteinerSystem& s);
SteinerSystem load_design(const std::string& path);

std::string rip_report_json(const RipReport& rep);

/// Rebuilds the ETF described by generator metadata; NoProvenance when the
/// sidecar has none.
EtfMatrix regenerate(const Sidecar& meta);

}  // namespace etf::io
