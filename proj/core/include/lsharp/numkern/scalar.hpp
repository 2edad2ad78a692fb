#pragma once

#include <string>
#include <variant>

#include "lsharp/numkern/bigfloat.hpp"
#include "lsharp/numkern/exact.hpp"

namespace lsharp {

/// Either an exact π-graded Gaussian rational or a BigComplex. Mixed
/// arithmetic promotes to BigComplex at the working precision.
class Scalar {
 public:
  Scalar() : v_(ExactScalar()) {}
  Scalar(long v) : v_(ExactScalar(v)) {}
  Scalar(const mpq_class& v) : v_(ExactScalar(v)) {}
  Scalar(const GaussRational& v) : v_(ExactScalar(v)) {}
  Scalar(ExactScalar v) : v_(std::move(v)) {}
  Scalar(BigComplex v) : v_(std::move(v)) {}

  bool is_exact() const noexcept { return std::holds_alternative<ExactScalar>(v_); }
  const ExactScalar& exact() const;
  BigComplex to_complex(long bits = 0) const;

  bool is_zero() const;
  /// Exact: every coefficient real. Numeric: imaginary part exactly zero.
  bool is_real() const;

  Scalar conj() const;
  Scalar real_part() const;
  Scalar imag_part() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Exact equality for exact operands; numeric comparison is bitwise.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Exact form for exact values, else decimal with `digits` digits.
  std::string to_string(int digits = 40) const;

 private:
  std::variant<ExactScalar, BigComplex> v_;
};

}  // namespace lsharp
