#include "lsharp/numkern/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "lsharp/error.hpp"

namespace lsharp {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

long result_bits(const BigFloat& a) { return std::max(working_precision(), a.precision()); }

long result_bits(const BigFloat& a, const BigFloat& b) {
  return std::max({working_precision(), a.precision(), b.precision()});
}

BigFloat make(long bits) { return BigFloat::zero_with_precision(bits); }

}  // namespace

BigFloat::BigFloat(long bits, int) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }

BigFloat::BigFloat() : BigFloat(working_precision(), 0) {}

BigFloat::BigFloat(int v) : BigFloat(working_precision(), 0) { mpfr_set_si(v_, v, kRnd); }

BigFloat::BigFloat(long v) : BigFloat(working_precision(), 0) { mpfr_set_si(v_, v, kRnd); }

BigFloat::BigFloat(double v) : BigFloat(working_precision(), 0) { mpfr_set_d(v_, v, kRnd); }

BigFloat::BigFloat(const mpz_class& v) : BigFloat(working_precision(), 0) {
  mpfr_set_z(v_, v.get_mpz_t(), kRnd);
}

BigFloat::BigFloat(const mpq_class& v) : BigFloat(working_precision(), 0) {
  mpfr_set_q(v_, v.get_mpq_t(), kRnd);
}

BigFloat::BigFloat(std::string_view text) : BigFloat(working_precision(), 0) {
  std::string s(text);
  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw DomainError("invalid rational literal: " + s);
    q.canonicalize();
    if (q.get_den() == 0) throw DomainError("zero denominator: " + s);
    mpfr_set_q(v_, q.get_mpq_t(), kRnd);
    return;
  }
  char* end = nullptr;
  mpfr_strtofr(v_, s.c_str(), &end, 10, kRnd);
  if (s.empty() || end == nullptr || *end != '\0') {
    mpfr_clear(v_);
    throw DomainError("invalid decimal literal: " + s);
  }
}

BigFloat::BigFloat(const BigFloat& other) : BigFloat(other.precision(), 0) {
  mpfr_set(v_, other.v_, kRnd);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : BigFloat(other.precision(), 0) {
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, kRnd);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pi() {
  BigFloat r = make(working_precision());
  mpfr_const_pi(r.v_, kRnd);
  return r;
}

BigFloat BigFloat::zero_with_precision(long bits) { return BigFloat(bits, 0); }

long BigFloat::precision() const noexcept { return mpfr_get_prec(v_); }

BigFloat BigFloat::rounded(long bits) const {
  BigFloat r = make(bits);
  mpfr_set(r.v_, v_, kRnd);
  return r;
}

#define LSHARP_BINOP(op, fn)                                  \
  BigFloat& BigFloat::operator op(const BigFloat& o) {        \
    const long bits = result_bits(*this, o);                  \
    if (bits != precision()) mpfr_prec_round(v_, bits, kRnd); \
    fn(v_, v_, o.v_, kRnd);                                   \
    return *this;                                             \
  }
LSHARP_BINOP(+=, mpfr_add)
LSHARP_BINOP(-=, mpfr_sub)
LSHARP_BINOP(*=, mpfr_mul)
LSHARP_BINOP(/=, mpfr_div)
#undef LSHARP_BINOP

BigFloat BigFloat::operator-() const {
  BigFloat r = *this;
  mpfr_neg(r.v_, r.v_, kRnd);
  return r;
}

bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

int BigFloat::sign() const noexcept { return mpfr_sgn(v_); }
bool BigFloat::is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
bool BigFloat::is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
bool BigFloat::is_integer() const noexcept { return mpfr_integer_p(v_) != 0; }
long BigFloat::exponent2() const noexcept { return is_zero() ? 0 : mpfr_get_exp(v_); }
double BigFloat::to_double() const noexcept { return mpfr_get_d(v_, kRnd); }
long BigFloat::to_long() const noexcept { return mpfr_get_si(v_, kRnd); }

mpz_class BigFloat::to_mpz() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v_, kRnd);
  return z;
}

mpq_class BigFloat::to_mpq() const {
  if (!is_finite()) throw DomainError("non-finite BigFloat has no rational value");
  if (is_zero()) return 0;
  mpz_class m;
  const long e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  mpq_class q(m);
  if (e >= 0) {
    mpz_class p;
    mpz_mul_2exp(p.get_mpz_t(), q.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return mpq_class(p);
  }
  mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  return q;
}

std::string BigFloat::to_string(int digits) const {
  if (digits <= 0) digits = static_cast<int>(precision() * 0.30103) + 1;
  if (is_zero()) return "0";
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return std::string(buf.data());
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.to_string(20); }

#define LSHARP_UNARY(name, fn)              \
  BigFloat name(const BigFloat& x) {        \
    BigFloat r = make(result_bits(x));      \
    fn(r.get(), x.get(), kRnd);             \
    return r;                               \
  }
LSHARP_UNARY(abs, mpfr_abs)
LSHARP_UNARY(sqrt, mpfr_sqrt)
LSHARP_UNARY(exp, mpfr_exp)
LSHARP_UNARY(log, mpfr_log)
LSHARP_UNARY(sin, mpfr_sin)
LSHARP_UNARY(cos, mpfr_cos)
LSHARP_UNARY(gamma_real, mpfr_gamma)
#undef LSHARP_UNARY

BigFloat floor(const BigFloat& x) {
  BigFloat r = make(result_bits(x));
  mpfr_floor(r.get(), x.get());
  return r;
}

BigFloat round(const BigFloat& x) {
  BigFloat r = make(result_bits(x));
  mpfr_round(r.get(), x.get());
  return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r = make(result_bits(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), kRnd);
  return r;
}

BigFloat pow(const BigFloat& x, const BigFloat& y) {
  BigFloat r = make(result_bits(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), kRnd);
  return r;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r = make(result_bits(x));
  mpfr_mul_2si(r.get(), x.get(), e, kRnd);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat pow10(double e) {
  BigFloat ten(10);
  return pow(ten, BigFloat(e));
}

// ---------------------------------------------------------------------------

BigComplex BigComplex::i() { return {BigFloat(0), BigFloat(1)}; }

long BigComplex::precision() const noexcept { return std::max(re.precision(), im.precision()); }

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat r = re * o.re - im * o.im;
  BigFloat i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  if (o.is_zero()) throw DivisionByZero("complex division by zero");
  const BigFloat den = o.re * o.re + o.im * o.im;
  BigFloat r = (re * o.re + im * o.im) / den;
  BigFloat i = (im * o.re - re * o.im) / den;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigFloat& o) {
  re *= o;
  im *= o;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigFloat& o) {
  re /= o;
  im /= o;
  return *this;
}

std::string BigComplex::to_string(int digits) const {
  return "(" + re.to_string(digits) + ", " + im.to_string(digits) + ")";
}

std::ostream& operator<<(std::ostream& os, const BigComplex& z) { return os << z.to_string(20); }

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigFloat abs(const BigComplex& z) {
  BigFloat r = make(std::max(working_precision(), z.precision()));
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), kRnd);
  return r;
}

BigFloat norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

BigFloat arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex exp(const BigComplex& z) { return polar(exp(z.re), z.im); }

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw PoleError("log(0)");
  return {log(abs(z)), arg(z)};
}

BigComplex sqrt(const BigComplex& z) {
  if (z.is_zero()) return z;
  const BigFloat r = abs(z);
  // Stable half-angle form; the branch cut is the negative real axis.
  BigFloat a = sqrt((r + abs(z.re)) / BigFloat(2));
  if (z.re.sign() >= 0) return {a, z.im / (BigFloat(2) * a)};
  BigFloat b = z.im.sign() < 0 ? -a : a;
  return {abs(z.im) / (BigFloat(2) * a), b};
}

BigComplex sin(const BigComplex& z) {
  // sin(x+iy) = sin x cosh y + i cos x sinh y
  const BigFloat ey = exp(z.im);
  const BigFloat eny = BigFloat(1) / ey;
  const BigFloat ch = (ey + eny) / BigFloat(2);
  const BigFloat sh = (ey - eny) / BigFloat(2);
  return {sin(z.re) * ch, cos(z.re) * sh};
}

BigComplex cos(const BigComplex& z) {
  const BigFloat ey = exp(z.im);
  const BigFloat eny = BigFloat(1) / ey;
  const BigFloat ch = (ey + eny) / BigFloat(2);
  const BigFloat sh = (ey - eny) / BigFloat(2);
  return {cos(z.re) * ch, -(sin(z.re) * sh)};
}

BigComplex pow(const BigComplex& z, const BigComplex& w) { return exp(w * log(z)); }

BigComplex pow(const BigFloat& x, const BigComplex& w) {
  if (x.sign() <= 0) throw DomainError("real base of complex power must be positive");
  return exp(w * BigComplex(log(x)));
}

BigComplex polar(const BigFloat& r, const BigFloat& theta) {
  BigFloat s = make(std::max({working_precision(), theta.precision(), r.precision()}));
  BigFloat c = s;
  mpfr_sin_cos(s.get(), c.get(), theta.get(), kRnd);
  return {r * c, r * s};
}

BigComplex expi(const BigFloat& theta) { return polar(BigFloat(1), theta); }

BigFloat relative_error(const BigComplex& a, const BigComplex& b) {
  const BigFloat diff = abs(a - b);
  const BigFloat scale = max(abs(a), abs(b));
  if (scale.is_zero()) return diff;
  return diff / scale;
}

}  // namespace lsharp
