// Typed error conditions raised by the library.
#pragma once

#include <stdexcept>
#include <string>

namespace weilzeta {

enum class ErrorCode {
  // exact arithmetic
  ModulusMismatch,
  ZeroPolynomial,
  // field loading / validation
  NotTotallyImaginary,
  ConjugationNotInvolution,
  ConjugationNotComplexConjugation,
  ConjugationNotIntegral,
  BasisNotUnimodularOverQ,
  RealSubfieldViolation,
  NonSquarefreeMinpoly,
  NonRealRelativeNorm,
  NonIntegralQuadric,
  BadFieldSpec,
  GTooLarge,
  // splitting
  BadPrime,
  DenominatorCollision,
  // Dirichlet series
  BadPrimeFactor,
  TruncationMismatch,
  NonUnitLeadingCoefficient,
  NotFundamentalDiscriminant,
  // enumeration / heights
  RamifiedSupport,
  // analysis
  NotCertifiedTrivialClassGroup,
  CaseMismatch,
  InsufficientRange,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail = "") {
  throw Error(code, detail);
}

}  // namespace weilzeta
