#pragma once

namespace lsharp {

inline constexpr long kDefaultPrecisionBits = 256;

/// Precision (mantissa bits) used for new BigFloat values on this thread.
/// Falls back to the process-wide default when no PrecisionScope is active.
long working_precision() noexcept;

/// Sets the process-wide default. Affects threads without an active scope.
void set_default_precision(long bits);
long default_precision() noexcept;

/// RAII override of the working precision for the current thread.
class PrecisionScope {
 public:
  explicit PrecisionScope(long bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  long saved_;
};

/// Bits needed to represent `digits` decimal digits.
long bits_for_digits(double digits) noexcept;

/// Internal precision for an operation whose accuracy target is
/// 10^{-P/divisor}: never below P, plus `guard` extra bits.
long bits_for_tolerance(long precision_bits, double divisor, long guard = 64) noexcept;

}  // namespace lsharp
