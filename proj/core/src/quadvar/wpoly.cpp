#include "lsharp/quadvar/wpoly.hpp"

#include <mutex>
#include <sstream>

#include "lsharp/error.hpp"
#include "lsharp/numkern/special.hpp"

namespace lsharp {

namespace {

using RatPoly = std::vector<mpq_class>;  // ascending powers of s

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  RatPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// C(a + b s, n) as a polynomial in s
RatPoly binom_poly(const mpq_class& a, const mpq_class& b, long n) {
  RatPoly r{mpq_class(1)};
  for (long j = 0; j < n; ++j) r = mul(r, RatPoly{a - j, b});
  const mpq_class inv(mpz_class(1), factorial(n));
  for (auto& c : r) c *= inv;
  return r;
}

mpq_class pow_q(const mpq_class& x, long n) {
  mpq_class r = 1;
  for (long i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

mpq_class akv(long k, long nu) {
  if (nu < 0 || k < 0) throw DomainError("akv: negative index");
  if (k < 3 * nu) return 0;
  RatPoly base(static_cast<std::size_t>(k + 1), 0);
  for (long j = 3; j <= k; ++j) base[j] = gen_binomial(GaussRational(mpq_class(1, 2)), j).re;
  RatPoly acc(static_cast<std::size_t>(k + 1), 0);
  acc[0] = 1;
  for (long n = 0; n < nu; ++n) {
    RatPoly next(static_cast<std::size_t>(k + 1), 0);
    for (long i = 0; i <= k; ++i) {
      if (acc[i] == 0) continue;
      for (long j = 3; i + j <= k; ++j) next[i + j] += acc[i] * base[j];
    }
    acc = std::move(next);
  }
  return acc[k];
}

ExactScalar a_constant(long nu, long mu, long k, long ell, long h) {
  if ((mu + k) % 2 != 0) throw DomainError("a_constant: mu + k must be even");
  const long p = (mu + k) / 2;
  mpq_class r = pow_q(mpq_class(-2), p) * pow_q(mpq_class(-1, 2), h) * akv(k, nu) / mpq_class(factorial(nu));
  r *= nu >= ell ? pow_q(mpq_class(4), nu - ell) : pow_q(mpq_class(1, 4), ell - nu);
  GaussRational c = GaussRational(r) * i_power(p + nu + ell);
  // Γ(p + 1/2)/√π is rational, so only π^{ν-ℓ-p} survives
  return ExactScalar::pi_power(2 * (nu - ell - p), c) * gamma_half_integer(mu + k + 1) *
         ExactScalar::pi_power(-1);
}

mpq_class pole_point(long ell) {
  mpq_class r = mpq_class(3, 4) - mpq_class(ell, 2);
  r.canonicalize();
  return r;
}

namespace {

WPoly build_w(long m) {
  WPoly w;
  w.m = m;
  for (long nu = 0; nu <= m; ++nu) {
    for (long k = 3 * nu; k <= m + 2 * nu; ++k) {
      const mpq_class a = akv(k, nu);
      if (a == 0) continue;
      for (long mu = 0; mu + k <= m + 2 * nu; ++mu) {
        if ((mu + k) % 2 != 0) continue;
        for (long ell = 0; 2 * ell + mu + k <= m + 2 * nu; ++ell) {
          const long h = m + 2 * nu - mu - k - 2 * ell;
          const ExactScalar A = a_constant(nu, mu, k, ell, h);
          // C(-1/4 - s - ℓ/2, μ) · C(1/2 - 2s + 2ν - μ - k - ℓ, h)
          const RatPoly b1 = binom_poly(mpq_class(-1, 4) - mpq_class(ell, 2), mpq_class(-1), mu);
          const RatPoly b2 = binom_poly(mpq_class(1, 2) + (2 * nu - mu - k - ell), mpq_class(-2), h);
          const RatPoly b = mul(b1, b2);
          for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] == 0) continue;
            ExactScalar& slot = w.terms[{static_cast<long>(i), h, ell}];
            slot += A * ExactScalar(b[i]);
          }
        }
      }
    }
  }
  for (auto it = w.terms.begin(); it != w.terms.end();) {
    it = it->second.is_zero() ? w.terms.erase(it) : std::next(it);
  }
  return w;
}

}  // namespace

std::shared_ptr<const WPoly> w_poly(long m) {
  if (m < 0) throw DomainError("w_poly: m must be non-negative");
  static std::mutex mtx;
  static std::map<long, std::shared_ptr<const WPoly>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  auto w = std::make_shared<const WPoly>(build_w(m));
  cache.emplace(m, w);
  return w;
}

std::map<std::pair<long, long>, ExactScalar> WPoly::at(const mpq_class& s) const {
  std::map<std::pair<long, long>, ExactScalar> out;
  for (const auto& [key, c] : terms) {
    out[{key.alpha_deg, key.ell}] += c * ExactScalar(pow_q(s, key.s_deg));
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

Scalar WPoly::eval(const Scalar& s, const Scalar& alpha, const std::vector<Scalar>& d) const {
  Scalar acc;
  for (const auto& [key, c] : terms) {
    if (key.ell >= static_cast<long>(d.size())) throw DomainError("WPoly::eval: missing D_" + std::to_string(key.ell));
    Scalar t = Scalar(c) * d[static_cast<std::size_t>(key.ell)];
    for (long i = 0; i < key.s_deg; ++i) t = t * s;
    for (long i = 0; i < key.alpha_deg; ++i) t = t * alpha;
    acc = acc + t;
  }
  return acc;
}

long WPoly::max_ell() const {
  long r = -1;
  for (const auto& [key, c] : terms) r = std::max(r, key.ell);
  return r;
}

long WPoly::alpha_degree() const {
  long r = -1;
  for (const auto& [key, c] : terms) r = std::max(r, key.alpha_deg);
  return r;
}

std::string WPoly::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (key.s_deg > 0) os << "*s^" << key.s_deg;
    if (key.alpha_deg > 0) os << "*a^" << key.alpha_deg;
    os << "*D" << key.ell;
  }
  return os.str();
}

}  // namespace lsharp
