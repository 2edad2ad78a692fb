#include "lsharp/numkern/scalar.hpp"

#include "lsharp/error.hpp"

namespace lsharp {

const ExactScalar& Scalar::exact() const {
  if (!is_exact()) throw DomainError("scalar is numeric, exact value requested");
  return std::get<ExactScalar>(v_);
}

BigComplex Scalar::to_complex(long bits) const {
  if (is_exact()) return std::get<ExactScalar>(v_).to_complex(bits);
  const auto& z = std::get<BigComplex>(v_);
  return bits > 0 ? z.rounded(bits) : z;
}

bool Scalar::is_zero() const {
  return is_exact() ? exact().is_zero() : std::get<BigComplex>(v_).is_zero();
}

bool Scalar::is_real() const {
  return is_exact() ? exact().is_real() : std::get<BigComplex>(v_).im.is_zero();
}

Scalar Scalar::conj() const {
  if (is_exact()) return exact().conj();
  return lsharp::conj(std::get<BigComplex>(v_));
}

Scalar Scalar::real_part() const {
  if (is_exact()) return exact().real_part();
  return BigComplex(std::get<BigComplex>(v_).re);
}

Scalar Scalar::imag_part() const {
  if (is_exact()) return exact().imag_part();
  return BigComplex(std::get<BigComplex>(v_).im);
}

#define LSHARP_SCALAR_OP(op)                                        \
  Scalar& Scalar::operator op(const Scalar& o) {                    \
    if (is_exact() && o.is_exact()) {                               \
      std::get<ExactScalar>(v_) op o.exact();                       \
    } else {                                                        \
      BigComplex z = to_complex();                                  \
      z op o.to_complex();                                          \
      v_ = std::move(z);                                            \
    }                                                               \
    return *this;                                                   \
  }

LSHARP_SCALAR_OP(+=)
LSHARP_SCALAR_OP(-=)
LSHARP_SCALAR_OP(*=)

#undef LSHARP_SCALAR_OP

Scalar& Scalar::operator/=(const Scalar& o) {
  if (is_exact() && o.is_exact() && o.exact().is_monomial()) {
    std::get<ExactScalar>(v_) /= o.exact();
  } else {
    BigComplex z = to_complex();
    z /= o.to_complex();
    v_ = std::move(z);
  }
  return *this;
}

Scalar Scalar::operator-() const {
  if (is_exact()) return -exact();
  return -std::get<BigComplex>(v_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  return a.to_complex() == b.to_complex();
}

std::string Scalar::to_string(int digits) const {
  return is_exact() ? exact().to_string() : std::get<BigComplex>(v_).to_string(digits);
}

}  // namespace lsharp
