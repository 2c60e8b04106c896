#pragma once

#include <stdexcept>
#include <string>

namespace merocert {

// Validation failures that name a specific mathematical defect of the input.
enum class Errc {
  NotNormalized,          // f(0) != 0 or f'(0) != 1
  PoleMissingAtP,         // denominator does not vanish at p (or numerator does)
  ExtraPoleInDisk,        // a second pole inside the open unit disk
  ZeroInDisk,             // f vanishes in D \ {0}, so z/f is not analytic
  DegeneratePole,         // pole at p is not simple
  NearZeroConstantTerm,   // series reciprocal of a series with |c0| below the guard
  InvalidLambda,          // lambda outside (0, 1]
  BadOrder,               // derivative-order argument below the minimum
  DegenerateDerivative,   // f' has an identically zero numerator
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::PoleMissingAtP: return "PoleMissingAtP";
    case Errc::ExtraPoleInDisk: return "ExtraPoleInDisk";
    case Errc::ZeroInDisk: return "ZeroInDisk";
    case Errc::DegeneratePole: return "DegeneratePole";
    case Errc::NearZeroConstantTerm: return "NearZeroConstantTerm";
    case Errc::InvalidLambda: return "InvalidLambda";
    case Errc::BadOrder: return "BadOrder";
    case Errc::DegenerateDerivative: return "DegenerateDerivative";
  }
  return "UnknownError";
}

class ModelError : public std::runtime_error {
 public:
  ModelError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace merocert
