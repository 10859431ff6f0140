#pragma once

#include <stdexcept>
#include <string>

namespace splinter {

enum class Errc {
  DivisionByZero,
  DimensionMismatch,
  DegreeMismatch,
  NotMonicInVariable,
  BudgetExceeded,
  UnsupportedDimension,
  DegenerateMap,
  StabilizationFailure,
  IdentityFailure,
  ShapeMismatch,
  Validation,
  CacheCorrupt,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::NotMonicInVariable: return "NotMonicInVariable";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::UnsupportedDimension: return "UnsupportedDimension";
    case Errc::DegenerateMap: return "DegenerateMap";
    case Errc::StabilizationFailure: return "StabilizationFailure";
    case Errc::IdentityFailure: return "IdentityFailure";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::Validation: return "Validation";
    case Errc::CacheCorrupt: return "CacheCorrupt";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace splinter
