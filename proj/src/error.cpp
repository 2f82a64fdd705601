#include "negacode/error.hpp"

namespace negacode {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::InvalidDegree: return "InvalidDegree";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::NotOddResidue: return "NotOddResidue";
    case Errc::CoefficientNotInBaseField: return "CoefficientNotInBaseField";
    case Errc::GcdViolation: return "GcdViolation";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotALeader: return "NotALeader";
    case Errc::OutOfLemmaRange: return "OutOfLemmaRange";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::NotMonic: return "NotMonic";
    case Errc::NotClosedUnderQ: return "NotClosedUnderQ";
    case Errc::NotOddResidues: return "NotOddResidues";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::FormulaMismatch: return "FormulaMismatch";
    case Errc::EvenStart: return "EvenStart";
    case Errc::DeltaTooSmall: return "DeltaTooSmall";
    case Errc::ZeroCode: return "ZeroCode";
    case Errc::FullCode: return "FullCode";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace negacode
