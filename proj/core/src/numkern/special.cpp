#include "lsharp/numkern/special.hpp"

#include <cmath>

#include "lsharp/error.hpp"
#include "lsharp/numkern/bernoulli.hpp"

namespace lsharp {

namespace {

constexpr double kPoleDistance = 1e-6;

void check_pole(const BigComplex& z) {
  const double re = z.re.to_double();
  const double im = z.im.to_double();
  if (re > 0.5) return;
  const double n = std::round(re);
  if (std::hypot(re - n, im) < kPoleDistance) {
    throw PoleError("log_gamma: argument within 1e-6 of the pole at " +
                    std::to_string(static_cast<long>(n)));
  }
}

}  // namespace

BigComplex log_gamma(const BigComplex& z) {
  check_pole(z);
  const long p = std::max(working_precision(), z.precision());
  const double zr = z.re.to_double();
  const double za = std::hypot(zr, z.im.to_double());

  // Raise Re z to at least R so the Stirling tail drops below 2^{-w} fast.
  long w = p + 32 + static_cast<long>(std::log2(std::abs(zr) + 2.0)) +
           static_cast<long>(std::log2(za * std::log(za + 2.0) + 2.0));
  const double big_r = 0.12 * static_cast<double>(w) + 8.0;
  const long shift = zr >= big_r ? 0 : static_cast<long>(std::ceil(big_r - zr));
  w += static_cast<long>(std::log2(static_cast<double>(shift) + 1.0)) + 8;

  PrecisionScope scope(w);
  BigComplex x = z.rounded(w);
  BigComplex correction(BigFloat(0), BigFloat(0));
  if (shift > 0) {
    BigComplex prod(BigFloat(1), BigFloat(0));
    double arg_sum = 0.0;
    for (long k = 0; k < shift; ++k) {
      BigComplex f = x + BigComplex(BigFloat(k), BigFloat(0));
      arg_sum += std::atan2(f.im.to_double(), f.re.to_double());
      prod *= f;
    }
    correction = log(prod);
    // Sum of principal args, not the arg of the product.
    const double twopi = 2.0 * M_PI;
    const double turns = std::round((arg_sum - correction.im.to_double()) / twopi);
    correction.im += BigFloat(turns) * BigFloat::pi() * BigFloat(2);
    x += BigComplex(BigFloat(shift), BigFloat(0));
  }

  const BigComplex half(BigFloat(0.5), BigFloat(0));
  const BigComplex lx = log(x);
  BigComplex result = (x - half) * lx - x + BigComplex(log(BigFloat::pi() * BigFloat(2)) / BigFloat(2));

  const BigComplex inv = BigComplex(BigFloat(1), BigFloat(0)) / x;
  const BigComplex inv2 = inv * inv;
  BigComplex power = inv;
  const BigFloat eps = ldexp(BigFloat(1), -w);
  const BigFloat scale = max(abs(result), BigFloat(1));
  for (long k = 1;; ++k) {
    const mpq_class c = bernoulli_number(2 * k) / mpq_class(2 * k * (2 * k - 1));
    const BigComplex term = power * BigFloat(c);
    result += term;
    if (abs(term) < eps * scale) break;
    if (k > 4 * w) throw NonConvergence("log_gamma: Stirling series did not converge");
    power *= inv2;
  }
  result -= correction;
  return result.rounded(p);
}

BigComplex gamma(const BigComplex& z) {
  const long p = std::max(working_precision(), z.precision());
  PrecisionScope scope(p + 16);
  return exp(log_gamma(z)).rounded(p);
}

BigComplex rgamma(const BigComplex& z) {
  const long p = std::max(working_precision(), z.precision());
  if (z.im.is_zero() && z.re.is_integer() && z.re.sign() <= 0) {
    return BigComplex(BigFloat::zero_with_precision(p), BigFloat::zero_with_precision(p));
  }
  PrecisionScope scope(p + 32);
  if (z.re.to_double() < 0.5) {
    // 1/Γ(z) = Γ(1-z) sin(πz)/π, regular at the poles of Γ.
    const BigComplex one(BigFloat(1), BigFloat(0));
    const BigComplex pz = z * BigFloat::pi();
    return (exp(log_gamma(one - z)) * sin(pz) / BigFloat::pi()).rounded(p);
  }
  return exp(-log_gamma(z)).rounded(p);
}

mpz_class factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

ExactScalar gamma_half_integer(long n2) {
  if (n2 % 2 == 0) {
    if (n2 <= 0) throw PoleError("gamma_half_integer: pole at " + std::to_string(n2 / 2));
    return ExactScalar(mpq_class(factorial(n2 / 2 - 1)));
  }
  if (n2 > 0) {
    // Γ(n+1/2) = (2n)!/(4^n n!) √π
    const long n = (n2 - 1) / 2;
    mpz_class four_n;
    mpz_ui_pow_ui(four_n.get_mpz_t(), 4, static_cast<unsigned long>(n));
    mpq_class c(factorial(2 * n), four_n * factorial(n));
    c.canonicalize();
    return ExactScalar::pi_power(1, GaussRational(c));
  }
  // Γ(1/2-n) = (-4)^n n!/(2n)! √π
  const long n = (1 - n2) / 2;
  mpz_class four_n;
  mpz_ui_pow_ui(four_n.get_mpz_t(), 4, static_cast<unsigned long>(n));
  if (n % 2 == 1) four_n = -four_n;
  mpq_class c(four_n * factorial(n), factorial(2 * n));
  c.canonicalize();
  return ExactScalar::pi_power(1, GaussRational(c));
}

ExactScalar gen_binomial(const ExactScalar& top, long k) {
  if (k < 0) throw DomainError("gen_binomial: k must be non-negative");
  ExactScalar r(1L);
  for (long j = 0; j < k; ++j) r *= top - ExactScalar(j);
  return r / factorial(k);
}

GaussRational gen_binomial(const GaussRational& top, long k) {
  if (k < 0) throw DomainError("gen_binomial: k must be non-negative");
  GaussRational r(1L);
  for (long j = 0; j < k; ++j) r *= top - GaussRational(j);
  return r / GaussRational(mpq_class(factorial(k)));
}

BigComplex gen_binomial(const BigComplex& top, long k) {
  if (k < 0) throw DomainError("gen_binomial: k must be non-negative");
  BigComplex r(BigFloat(1), BigFloat(0));
  for (long j = 0; j < k; ++j) r *= top - BigComplex(BigFloat(j), BigFloat(0));
  return r / BigFloat(factorial(k));
}

}  // namespace lsharp
