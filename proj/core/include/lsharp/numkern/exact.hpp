#pragma once

#include <map>
#include <string>

#include <gmpxx.h>

#include "lsharp/numkern/bigfloat.hpp"

namespace lsharp {

/// p/q + (r/s)·i with exact GMP rationals.
struct GaussRational {
  mpq_class re;
  mpq_class im;

  GaussRational() = default;
  GaussRational(long r) : re(r), im(0) {}
  GaussRational(const mpq_class& r) : re(r), im(0) {}
  GaussRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational i() { return {0, 1}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussRational conj() const { return {re, -im}; }
  mpq_class norm() const { return re * re + im * im; }
  GaussRational inverse() const;

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);
  GaussRational operator-() const { return {-re, -im}; }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  BigComplex to_complex() const;
  std::string to_string() const;
};

/// i^n for any integer n.
GaussRational i_power(long n);

/// Exact element of Q(i)[π^{1/2}, π^{-1/2}]: a finite sum Σ c_g·π^{g/2} with
/// Gaussian-rational c_g. Keys are twice the π-exponent, so odd keys are the
/// half-grades that appear with Γ at half-integers. No stored coefficient is
/// zero; with π transcendental the value is zero iff the map is empty.
class ExactScalar {
 public:
  using Terms = std::map<long, GaussRational>;

  ExactScalar() = default;
  ExactScalar(long v) : ExactScalar(GaussRational(v)) {}
  ExactScalar(const mpq_class& v) : ExactScalar(GaussRational(v)) {}
  ExactScalar(const GaussRational& v);

  /// c·π^{half_exponent/2}
  static ExactScalar pi_power(long half_exponent, const GaussRational& c = GaussRational(1));
  static ExactScalar i() { return ExactScalar(GaussRational::i()); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// True when only the π^0 grade is present (or the value is zero).
  bool is_gaussian() const noexcept;
  bool is_rational() const noexcept;
  bool is_real() const noexcept;
  /// Grade-0 part; throws DomainError if other grades are present.
  GaussRational gaussian() const;
  mpq_class rational() const;
  /// Twice the π-exponent of a monomial.
  long grade2() const;

  ExactScalar conj() const;
  ExactScalar real_part() const;
  ExactScalar imag_part() const;
  /// Inverse of a monomial; throws DomainError otherwise.
  ExactScalar inverse() const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);
  ExactScalar operator-() const;

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend ExactScalar operator/(ExactScalar a, const mpz_class& b);
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.terms_ == b.terms_;
  }

  /// Correctly rounded at `bits` for each grade, then summed.
  BigComplex to_complex(long bits = 0) const;
  /// e.g. "121/2", "-1/2*i", "(3/4)*pi^2", "-2*pi^(-1/2)"
  std::string to_string() const;

 private:
  void add_term(long key, const GaussRational& c);
  Terms terms_;
};

}  // namespace lsharp
