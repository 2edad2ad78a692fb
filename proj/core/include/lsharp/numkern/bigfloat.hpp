#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

#include "lsharp/numkern/precision.hpp"

namespace lsharp {

/// Arbitrary-precision real (MPFR). New values take the thread's working
/// precision; arithmetic results take the maximum of the working precision
/// and the operand precisions, so precision never silently drops.
class BigFloat {
 public:
  BigFloat();
  BigFloat(int v);
  BigFloat(long v);
  BigFloat(double v);
  explicit BigFloat(const mpz_class& v);
  explicit BigFloat(const mpq_class& v);
  /// Decimal or "p/q" string, rounded to nearest at the working precision.
  explicit BigFloat(std::string_view text);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat pi();
  static BigFloat zero_with_precision(long bits);

  long precision() const noexcept;
  BigFloat rounded(long bits) const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat operator-() const;

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

  friend bool operator==(const BigFloat& a, const BigFloat& b);
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

  int sign() const noexcept;
  bool is_zero() const noexcept;
  bool is_finite() const noexcept;
  bool is_integer() const noexcept;
  long exponent2() const noexcept;  ///< x = m·2^e with 1/2 ≤ |m| < 1; returns e

  double to_double() const noexcept;
  long to_long() const noexcept;  ///< rounds to nearest
  mpz_class to_mpz() const;       ///< rounds to nearest
  mpq_class to_mpq() const;       ///< exact value of the binary float
  /// Scientific notation with `digits` significant digits; deterministic.
  std::string to_string(int digits = 0) const;

  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get() noexcept { return v_; }

 private:
  explicit BigFloat(long bits, int /*tag*/);
  mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat floor(const BigFloat& x);
BigFloat round(const BigFloat& x);
BigFloat ldexp(const BigFloat& x, long e);
BigFloat gamma_real(const BigFloat& x);
BigFloat max(const BigFloat& a, const BigFloat& b);
/// 10^{e} at the working precision.
BigFloat pow10(double e);

/// Complex number with BigFloat parts.
struct BigComplex {
  BigFloat re;
  BigFloat im;

  BigComplex() = default;
  BigComplex(const BigFloat& r) : re(r), im(BigFloat::zero_with_precision(r.precision())) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(int r) : re(r), im(0) {}
  BigComplex(long r) : re(r), im(0L) {}
  BigComplex(double r, double i = 0.0) : re(r), im(i) {}

  static BigComplex i();

  long precision() const noexcept;
  BigComplex rounded(long bits) const { return {re.rounded(bits), im.rounded(bits)}; }

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  BigComplex& operator*=(const BigFloat& o);
  BigComplex& operator/=(const BigFloat& o);
  BigComplex operator-() const { return {-re, -im}; }

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const BigFloat& b) { return a *= b; }
  friend BigComplex operator*(const BigFloat& b, BigComplex a) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigFloat& b) { return a /= b; }

  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re == b.re && a.im == b.im;
  }

  bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
  std::string to_string(int digits = 0) const;
};

std::ostream& operator<<(std::ostream& os, const BigComplex& z);

BigComplex conj(const BigComplex& z);
BigFloat abs(const BigComplex& z);
BigFloat norm(const BigComplex& z);  ///< |z|^2
BigFloat arg(const BigComplex& z);   ///< principal, in (-π, π]
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);  ///< principal branch
BigComplex sqrt(const BigComplex& z);
BigComplex sin(const BigComplex& z);
BigComplex cos(const BigComplex& z);
BigComplex pow(const BigComplex& z, const BigComplex& w);  ///< exp(w·Log z)
BigComplex pow(const BigFloat& x, const BigComplex& w);   ///< x > 0
BigComplex expi(const BigFloat& theta);                   ///< e^{iθ}
BigComplex polar(const BigFloat& r, const BigFloat& theta);

/// Relative distance |a-b| / max(|a|,|b|), or |a-b| when both vanish.
BigFloat relative_error(const BigComplex& a, const BigComplex& b);

}  // namespace lsharp
