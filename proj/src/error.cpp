#include "weilzeta/error.hpp"

namespace weilzeta {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotTotallyImaginary: return "NotTotallyImaginary";
    case ErrorCode::ConjugationNotInvolution: return "ConjugationNotInvolution";
    case ErrorCode::ConjugationNotComplexConjugation: return "ConjugationNotComplexConjugation";
    case ErrorCode::ConjugationNotIntegral: return "ConjugationNotIntegral";
    case ErrorCode::BasisNotUnimodularOverQ: return "BasisNotUnimodularOverQ";
    case ErrorCode::RealSubfieldViolation: return "RealSubfieldViolation";
    case ErrorCode::NonSquarefreeMinpoly: return "NonSquarefreeMinpoly";
    case ErrorCode::NonRealRelativeNorm: return "NonRealRelativeNorm";
    case ErrorCode::NonIntegralQuadric: return "NonIntegralQuadric";
    case ErrorCode::BadFieldSpec: return "BadFieldSpec";
    case ErrorCode::GTooLarge: return "GTooLarge";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::DenominatorCollision: return "DenominatorCollision";
    case ErrorCode::BadPrimeFactor: return "BadPrimeFactor";
    case ErrorCode::TruncationMismatch: return "TruncationMismatch";
    case ErrorCode::NonUnitLeadingCoefficient: return "NonUnitLeadingCoefficient";
    case ErrorCode::NotFundamentalDiscriminant: return "NotFundamentalDiscriminant";
    case ErrorCode::RamifiedSupport: return "RamifiedSupport";
    case ErrorCode::NotCertifiedTrivialClassGroup: return "NotCertifiedTrivialClassGroup";
    case ErrorCode::CaseMismatch: return "CaseMismatch";
    case ErrorCode::InsufficientRange: return "InsufficientRange";
  }
  return "UnknownError";
}

}  // namespace weilzeta
