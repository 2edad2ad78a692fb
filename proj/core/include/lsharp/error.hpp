#pragma once

#include <stdexcept>
#include <string>

namespace lsharp {

// Base of every error thrown by the library. Each subclass names the failure
// mode so callers (and the CLI) can report it without parsing messages.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define LSHARP_ERROR_CLASS(Name)                                       \
  class Name : public Error {                                          \
   public:                                                             \
    using Error::Error;                                                \
    const char* kind() const noexcept override { return #Name; }       \
  }

// numkern
LSHARP_ERROR_CLASS(PoleError);
LSHARP_ERROR_CLASS(NonConvergence);
LSHARP_ERROR_CLASS(DomainError);
// gamma_core
LSHARP_ERROR_CLASS(InvalidGammaFactor);
LSHARP_ERROR_CLASS(NotDegreeTwo);
LSHARP_ERROR_CLASS(NotConductorOne);
LSHARP_ERROR_CLASS(ChiNotReal);
LSHARP_ERROR_CLASS(ParityUndefined);
// hfun
LSHARP_ERROR_CLASS(FrequencyCollision);
LSHARP_ERROR_CLASS(PrefactorMismatch);
LSHARP_ERROR_CLASS(IllConditioned);
LSHARP_ERROR_CLASS(DivisionByZero);
// quadvar
LSHARP_ERROR_CLASS(StructuralViolation);
LSHARP_ERROR_CLASS(NormalizationFailure);
LSHARP_ERROR_CLASS(InterpolationMismatch);
// lfun / periodfn
LSHARP_ERROR_CLASS(FitUnstable);
LSHARP_ERROR_CLASS(UnexpectedPole);
LSHARP_ERROR_CLASS(BudgetExceeded);
LSHARP_ERROR_CLASS(SlowConvergence);
LSHARP_ERROR_CLASS(IoError);

#undef LSHARP_ERROR_CLASS

// Parse failures carry the position of the offending input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  const char* kind() const noexcept override { return "ParseError"; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lsharp
