#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lsharp/error.hpp"
#include "lsharp/numkern/bigfloat.hpp"
#include "lsharp/numkern/exact.hpp"
#include "lsharp/numkern/scalar.hpp"

namespace lsharp {

namespace detail {
inline ExactScalar from_rational(const mpq_class& q, const ExactScalar*) { return ExactScalar(q); }
inline Scalar from_rational(const mpq_class& q, const Scalar*) { return Scalar(q); }
inline BigComplex from_rational(const mpq_class& q, const BigComplex*) {
  return BigComplex(BigFloat(q));
}
inline BigComplex to_big(const ExactScalar& v) { return v.to_complex(); }
inline BigComplex to_big(const Scalar& v) { return v.to_complex(); }
inline BigComplex to_big(const BigComplex& v) { return v; }
inline bool is_zero_coeff(const ExactScalar& v) { return v.is_zero(); }
inline bool is_zero_coeff(const Scalar& v) { return v.is_zero(); }
inline bool is_zero_coeff(const BigComplex& v) { return v.is_zero(); }
}  // namespace detail

/// Truncated series c[0] + c[1]x + ... + c[M]x^M. For asymptotic use the
/// variable is 1/z. Every operation keeps the truncation order M exactly.
template <class T>
class AsymSeries {
 public:
  enum class Variable { InverseZ, X };

  explicit AsymSeries(long order = 0, Variable var = Variable::InverseZ)
      : var_(var), c_(static_cast<std::size_t>(order) + 1, rational(0)) {
    if (order < 0) throw DomainError("series order must be non-negative");
  }
  AsymSeries(std::vector<T> coeffs, Variable var = Variable::InverseZ)
      : var_(var), c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(rational(0));
  }

  static T rational(const mpq_class& q) { return detail::from_rational(q, static_cast<const T*>(nullptr)); }
  static AsymSeries constant(const T& v, long order, Variable var = Variable::InverseZ) {
    AsymSeries s(order, var);
    s.c_[0] = v;
    return s;
  }

  long order() const noexcept { return static_cast<long>(c_.size()) - 1; }
  Variable variable() const noexcept { return var_; }
  const T& operator[](long i) const { return c_.at(static_cast<std::size_t>(i)); }
  T& operator[](long i) { return c_.at(static_cast<std::size_t>(i)); }
  const std::vector<T>& coeffs() const noexcept { return c_; }

  AsymSeries truncated(long order) const {
    AsymSeries r(order, var_);
    for (long i = 0; i <= std::min(order, this->order()); ++i) r[i] = c_[static_cast<std::size_t>(i)];
    return r;
  }

  AsymSeries& operator+=(const AsymSeries& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  AsymSeries& operator-=(const AsymSeries& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  AsymSeries& operator*=(const T& v) {
    for (auto& c : c_) c *= v;
    return *this;
  }
  friend AsymSeries operator+(AsymSeries a, const AsymSeries& b) { return a += b; }
  friend AsymSeries operator-(AsymSeries a, const AsymSeries& b) { return a -= b; }
  friend AsymSeries operator*(AsymSeries a, const T& v) { return a *= v; }

  friend AsymSeries operator*(const AsymSeries& a, const AsymSeries& b) {
    a.check(b);
    const long m = a.order();
    AsymSeries r(m, a.var_);
    for (long i = 0; i <= m; ++i) {
      if (detail::is_zero_coeff(a[i])) continue;
      for (long j = 0; i + j <= m; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  }
  AsymSeries& operator*=(const AsymSeries& o) { return *this = *this * o; }

  /// 1/s for s with invertible constant term.
  AsymSeries reciprocal() const {
    if (detail::is_zero_coeff(c_[0])) throw DivisionByZero("reciprocal of a non-unit series");
    const long m = order();
    AsymSeries r(m, var_);
    const T inv0 = rational(1) / c_[0];
    r[0] = inv0;
    for (long n = 1; n <= m; ++n) {
      T acc = rational(0);
      for (long k = 1; k <= n; ++k) acc += (*this)[k] * r[n - k];
      r[n] = -(acc * inv0);
    }
    return r;
  }

  /// exp(s) for s with zero constant term.
  AsymSeries exp() const {
    if (!detail::is_zero_coeff(c_[0])) throw DomainError("exp of a series with nonzero constant term");
    const long m = order();
    AsymSeries e(m, var_);
    e[0] = rational(1);
    for (long n = 1; n <= m; ++n) {
      T acc = rational(0);
      for (long k = 1; k <= n; ++k) acc += rational(k) * (*this)[k] * e[n - k];
      e[n] = acc * rational(mpq_class(1, n));
    }
    return e;
  }

  /// log(s) for s with constant term 1.
  AsymSeries log() const {
    if (!(c_[0] == rational(1))) throw DomainError("log of a series whose constant term is not 1");
    const long m = order();
    AsymSeries l(m, var_);
    for (long n = 1; n <= m; ++n) {
      T acc = rational(n) * (*this)[n];
      for (long k = 1; k < n; ++k) acc -= rational(k) * l[k] * (*this)[n - k];
      l[n] = acc * rational(mpq_class(1, n));
    }
    return l;
  }

  /// Σ c[i] x^i with x the value of the series variable (1/z for InverseZ).
  BigComplex eval(const BigComplex& x) const {
    BigComplex acc(BigFloat(0), BigFloat(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += detail::to_big(*it);
    }
    return acc;
  }

 private:
  void check(const AsymSeries& o) const {
    if (o.c_.size() != c_.size() || o.var_ != var_) {
      throw DomainError("series operands differ in order or variable");
    }
  }

  Variable var_;
  std::vector<T> c_;
};

/// log Γ(λz+μ) as z → ∞:
///   λz·log z + (λ log λ − λ)z + (μ − 1/2)(log z + log λ) + ½ log 2π + series(1/z)
/// with series coefficient of z^{-m} equal to (−1)^{m+1}B_{m+1}(μ)/(m(m+1)λ^m).
struct StirlingExpansion {
  mpq_class lambda;
  Scalar mu;
  AsymSeries<Scalar> series;  ///< constant term 0

  /// Full expansion at z (prefactor plus truncated series).
  BigComplex eval_log(const BigComplex& z) const;
};

StirlingExpansion stirling_series(const mpq_class& lambda, const Scalar& mu, long order);

/// B_n(x) dispatched on the scalar tower.
Scalar bernoulli_poly(long n, const Scalar& x);

}  // namespace lsharp
