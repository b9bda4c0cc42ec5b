#pragma once

#include <stdexcept>
#include <string>

namespace etf {

enum class Errc {
  not_prime,
  too_large,
  division_by_zero,
  field_mismatch,
  invalid_v,
  inadmissible_v,
  inadmissible_q,
  invalid_design,
  order_mismatch,
  assignment_collision,
  not_tight,
  dimension_mismatch,
  invalid_dims,
  invalid_delta,
  invalid_k,
  budget_exceeded,
  no_provenance,
  io_error,
  bad_argument,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_prime: return "NotPrime";
    case Errc::too_large: return "TooLarge";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::invalid_v: return "InvalidV";
    case Errc::inadmissible_v: return "InadmissibleV";
    case Errc::inadmissible_q: return "InadmissibleQ";
    case Errc::invalid_design: return "InvalidDesign";
    case Errc::order_mismatch: return "OrderMismatch";
    case Errc::assignment_collision: return "AssignmentCollision";
    case Errc::not_tight: return "NotTight";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::invalid_dims: return "InvalidDims";
    case Errc::invalid_delta: return "InvalidDelta";
    case Errc::invalid_k: return "InvalidK";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::no_provenance: return "NoProvenance";
    case Errc::io_error: return "IoError";
    case Errc::bad_argument: return "BadArgument";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace etf
