#include "lsharp/numkern/exact.hpp"

#include <algorithm>

#include "lsharp/error.hpp"

namespace lsharp {

GaussRational GaussRational::inverse() const {
  const mpq_class n = norm();
  if (n == 0) throw DivisionByZero("inverse of zero Gaussian rational");
  return {re / n, -im / n};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  mpq_class r = re * o.re - im * o.im;
  mpq_class i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) { return *this *= o.inverse(); }

BigComplex GaussRational::to_complex() const { return {BigFloat(re), BigFloat(im)}; }

std::string GaussRational::to_string() const {
  if (im == 0) return re.get_str();
  const std::string ipart = im == 1 ? "i" : im == -1 ? "-i" : im.get_str() + "*i";
  if (re == 0) return ipart;
  return re.get_str() + (im > 0 ? "+" : "") + ipart;
}

GaussRational i_power(long n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

// ---------------------------------------------------------------------------

ExactScalar::ExactScalar(const GaussRational& v) {
  if (!v.is_zero()) terms_.emplace(0, v);
}

ExactScalar ExactScalar::pi_power(long half_exponent, const GaussRational& c) {
  ExactScalar r;
  if (!c.is_zero()) r.terms_.emplace(half_exponent, c);
  return r;
}

bool ExactScalar::is_gaussian() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool ExactScalar::is_rational() const noexcept {
  return is_gaussian() && (terms_.empty() || terms_.begin()->second.is_real());
}

bool ExactScalar::is_real() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.second.is_real(); });
}

GaussRational ExactScalar::gaussian() const {
  if (!is_gaussian()) throw DomainError("exact scalar has nonzero pi-grades: " + to_string());
  return terms_.empty() ? GaussRational(0) : terms_.begin()->second;
}

mpq_class ExactScalar::rational() const {
  if (!is_rational()) throw DomainError("exact scalar is not rational: " + to_string());
  return terms_.empty() ? mpq_class(0) : terms_.begin()->second.re;
}

long ExactScalar::grade2() const {
  if (!is_monomial()) throw DomainError("grade of a non-monomial: " + to_string());
  return terms_.begin()->first;
}

void ExactScalar::add_term(long key, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExactScalar ExactScalar::conj() const {
  ExactScalar r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.conj());
  return r;
}

ExactScalar ExactScalar::real_part() const {
  ExactScalar r;
  for (const auto& [k, c] : terms_) r.add_term(k, GaussRational(c.re));
  return r;
}

ExactScalar ExactScalar::imag_part() const {
  ExactScalar r;
  for (const auto& [k, c] : terms_) r.add_term(k, GaussRational(c.im));
  return r;
}

ExactScalar ExactScalar::inverse() const {
  if (terms_.empty()) throw DivisionByZero("inverse of exact zero");
  if (!is_monomial()) throw DomainError("inverse of a non-monomial exact scalar: " + to_string());
  const auto& [k, c] = *terms_.begin();
  return pi_power(-k, c.inverse());
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  ExactScalar r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
  }
  return r;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) { return *this = *this * o; }

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) { return *this = *this * o.inverse(); }

ExactScalar operator/(ExactScalar a, const mpz_class& b) {
  if (b == 0) throw DivisionByZero("exact scalar divided by zero");
  const mpq_class inv(mpz_class(1), b);
  for (auto& [k, c] : a.terms_) {
    c.re *= inv;
    c.im *= inv;
    c.re.canonicalize();
    c.im.canonicalize();
  }
  return a;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

BigComplex ExactScalar::to_complex(long bits) const {
  if (bits <= 0) bits = working_precision();
  PrecisionScope scope(bits + 32);
  BigComplex sum(BigFloat(0), BigFloat(0));
  const BigFloat log_pi = log(BigFloat::pi());
  for (const auto& [k, c] : terms_) {
    BigComplex term = c.to_complex();
    if (k != 0) term *= exp(log_pi * BigFloat(k) / BigFloat(2));
    sum += term;
  }
  return sum.rounded(bits);
}

std::string ExactScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    std::string coeff = c.to_string();
    std::string piece;
    if (k == 0) {
      piece = coeff;
    } else {
      std::string pi = "pi";
      if (k != 2) {
        pi += "^";
        if (k % 2 == 0) {
          pi += k / 2 < 0 ? "(" + std::to_string(k / 2) + ")" : std::to_string(k / 2);
        } else {
          pi += "(" + std::to_string(k) + "/2)";
        }
      }
      if (c == GaussRational(1)) {
        piece = pi;
      } else if (c == GaussRational(-1)) {
        piece = "-" + pi;
      } else if (c.im == 0) {
        piece = coeff + "*" + pi;
      } else {
        piece = "(" + coeff + ")*" + pi;
      }
    }
    if (!out.empty() && piece.front() != '-') out += "+";
    out += piece;
  }
  return out;
}

}  // namespace lsharp
