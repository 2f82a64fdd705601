#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace negacode {

enum class Errc {
  NotPrime,
  EvenCharacteristic,
  InvalidDegree,
  FieldTooLarge,
  DivisionByZero,
  FieldMismatch,
  ZeroConstantTerm,
  NotOddResidue,
  CoefficientNotInBaseField,
  GcdViolation,
  NotCoprime,
  OutOfRange,
  NotALeader,
  OutOfLemmaRange,
  NotADivisor,
  NotMonic,
  NotClosedUnderQ,
  NotOddResidues,
  BudgetExceeded,
  HypothesisViolated,
  FormulaMismatch,
  EvenStart,
  DeltaTooSmall,
  ZeroCode,
  FullCode,
  NotApplicable,
  InvalidArgument,
  InternalInconsistency,
};

std::string_view to_string(Errc code) noexcept;

/// Every library failure carries a machine-checkable code next to the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, Errc code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace negacode
