#include "lsharp/numkern/bernoulli.hpp"

#include <cmath>
#include <deque>
#include <mutex>

#include "lsharp/error.hpp"
#include "lsharp/numkern/special.hpp"

namespace lsharp {

namespace {

std::mutex g_mutex;
std::vector<mpq_class> g_numbers;                 // B_0, B_1, ...
std::deque<std::vector<mpq_class>> g_poly;        // deque: references stay valid

// Von Staudt–Clausen: denominator of B_{2k} is the product of primes p with
// (p-1) | 2k. The numerator then follows from B_{2k} = ±2(2k)!ζ(2k)/(2π)^{2k}
// evaluated with enough bits to round correctly.
mpq_class even_bernoulli(long n) {
  mpz_class denom = 1;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    for (long e : {d, n / d}) {
      if (mpz_probab_prime_p(mpz_class(e + 1).get_mpz_t(), 30) != 0) denom *= e + 1;
      if (e == n / d && e == d) break;
    }
  }
  const double mag = std::lgamma(static_cast<double>(n) + 1.0) / std::log(2.0) -
                     static_cast<double>(n) * std::log2(2.0 * M_PI);
  const long bits = static_cast<long>(std::max(mag, 0.0)) +
                    static_cast<long>(mpz_sizeinbase(denom.get_mpz_t(), 2)) + 64;
  PrecisionScope scope(bits);
  BigFloat z;
  mpfr_zeta_ui(z.get(), static_cast<unsigned long>(n), MPFR_RNDN);
  BigFloat v = BigFloat(factorial(n)) * z * BigFloat(2) /
               pow(BigFloat::pi() * BigFloat(2), BigFloat(n)) * BigFloat(denom);
  mpz_class num = v.to_mpz();
  if ((n / 2) % 2 == 0) num = -num;
  mpq_class b(num, denom);
  b.canonicalize();
  return b;
}

void extend_numbers(long n) {
  while (static_cast<long>(g_numbers.size()) <= n) {
    const long k = static_cast<long>(g_numbers.size());
    if (k == 0) {
      g_numbers.emplace_back(1);
    } else if (k == 1) {
      g_numbers.emplace_back(-1, 2);
    } else if (k % 2 == 1) {
      g_numbers.emplace_back(0);
    } else {
      g_numbers.push_back(even_bernoulli(k));
    }
  }
}

}  // namespace

mpq_class bernoulli_number(long n) {
  if (n < 0) throw DomainError("Bernoulli index must be non-negative");
  std::lock_guard lock(g_mutex);
  extend_numbers(n);
  return g_numbers[static_cast<std::size_t>(n)];
}

const std::vector<mpq_class>& bernoulli_poly_coeffs(long n) {
  if (n < 0) throw DomainError("Bernoulli index must be non-negative");
  std::lock_guard lock(g_mutex);
  extend_numbers(n);
  while (static_cast<long>(g_poly.size()) <= n) {
    const long m = static_cast<long>(g_poly.size());
    // B_m(x) = Σ_k C(m,k) B_k x^{m-k}
    std::vector<mpq_class> c(static_cast<std::size_t>(m) + 1);
    mpz_class binom = 1;
    for (long k = 0; k <= m; ++k) {
      c[static_cast<std::size_t>(m - k)] = mpq_class(binom) * g_numbers[static_cast<std::size_t>(k)];
      binom = binom * (m - k) / (k + 1);
    }
    g_poly.push_back(std::move(c));
  }
  return g_poly[static_cast<std::size_t>(n)];
}

namespace {

template <class T>
T horner(const std::vector<mpq_class>& c, const T& x, T acc) {
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += T(*it);
  }
  return acc;
}

}  // namespace

ExactScalar bernoulli_poly(long n, const ExactScalar& x) {
  return horner(bernoulli_poly_coeffs(n), x, ExactScalar());
}

GaussRational bernoulli_poly(long n, const GaussRational& x) {
  return horner(bernoulli_poly_coeffs(n), x, GaussRational());
}

BigComplex bernoulli_poly(long n, const BigComplex& x) {
  const auto& c = bernoulli_poly_coeffs(n);
  BigComplex acc(BigFloat(0), BigFloat(0));
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += BigComplex(BigFloat(*it));
  }
  return acc;
}

}  // namespace lsharp
