#include "lsharp/gamma/invariants.hpp"

#include <map>

#include "lsharp/error.hpp"
#include "lsharp/numkern/series.hpp"

namespace lsharp {

namespace {

Scalar lambda_power(const mpq_class& lambda, long e) {
  mpq_class r = 1;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= lambda;
  if (e < 0) r = 1 / r;
  return Scalar(r);
}

Scalar H_value(const GammaFactor& g, long n) {
  Scalar acc(0L);
  for (const auto& t : g.terms) acc += bernoulli_poly(n, t.mu) / lambda_power(t.lambda, n - 1);
  return acc * Scalar(2L);
}

// q = (2π)^d Q² Πλ^{2λ}, exact when every prime exponent is integral.
void conductor(const GammaFactor& g, const mpq_class& d, InvariantSet& out) {
  if (g.Q.is_exact()) {
    std::map<long, mpq_class> primes;
    primes[2] += d;
    for (const auto& [p, e] : g.Q.prime_exponents()) primes[p] += 2 * e;
    for (const auto& t : g.terms) {
      for (const auto& [p, e] : factor_rational(t.lambda)) primes[p] += 2 * t.lambda * e;
    }
    const mpq_class pi2 = 2 * (d + 2 * g.Q.pi_exponent());
    bool integral = pi2.get_den() == 1 && pi2.get_num().fits_slong_p();
    mpq_class value = 1;
    for (const auto& [p, e] : primes) {
      if (e == 0) continue;
      if (e.get_den() != 1 || !e.get_num().fits_slong_p()) {
        integral = false;
        break;
      }
      const long k = e.get_num().get_si();
      mpz_class pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k < 0 ? -k : k));
      value *= k < 0 ? mpq_class(1, 1) / mpq_class(pk) : mpq_class(pk);
    }
    if (integral) {
      value.canonicalize();
      out.conductor = ExactScalar::pi_power(pi2.get_num().get_si(), GaussRational(value));
      out.conductor_exact = true;
      return;
    }
    out.flags.emplace_back("IrrationalConductor");
  } else {
    out.flags.emplace_back("NumericConductor");
  }
  BigFloat lq = BigFloat(d) * log(BigFloat::pi() * BigFloat(2)) + BigFloat(2) * g.Q.log_value();
  for (const auto& t : g.terms) {
    const BigFloat lam(t.lambda);
    lq += BigFloat(2) * lam * log(lam);
  }
  out.conductor = BigComplex(exp(lq));
  out.conductor_exact = false;
}

// ω_F = ω Πλ^{-2i Im μ}; grouped by λ so that conjugate pairs cancel exactly.
Scalar root_number(const GammaFactor& g) {
  std::map<mpq_class, Scalar> im_sum;
  for (const auto& t : g.terms) {
    auto [it, fresh] = im_sum.try_emplace(t.lambda, Scalar(0L));
    it->second += t.mu.imag_part();
  }
  Scalar w = *g.omega;
  for (const auto& [lam, y] : im_sum) {
    if (lam == 1 || y.is_zero()) continue;
    const BigFloat phase = BigFloat(-2) * y.to_complex().re * log(BigFloat(lam));
    w *= Scalar(expi(phase));
  }
  return w;
}

}  // namespace

Scalar chi_of(const GammaFactor& g) {
  return H_value(g, 1) + H_value(g, 2) + Scalar(mpq_class(2, 3));
}

InvariantSet invariants(const GammaFactor& g, long n_max) {
  g.validate();
  if (n_max < 2) n_max = 2;
  InvariantSet out;
  mpq_class d = 0;
  for (const auto& t : g.terms) d += 2 * t.lambda;
  out.degree = d;
  conductor(g, d, out);
  if (g.omega) out.root_number = root_number(g);

  Scalar xi(0L);
  for (const auto& t : g.terms) xi += t.mu - Scalar(mpq_class(1, 2));
  out.xi = xi * Scalar(2L);
  out.eta = out.xi.real_part();
  out.theta = d == 0 ? Scalar(0L) : out.xi.imag_part() / Scalar(d);

  out.H.reserve(static_cast<std::size_t>(n_max) + 1);
  out.H.emplace_back(d);
  for (long n = 1; n <= n_max; ++n) out.H.push_back(H_value(g, n));
  out.chi = out.H[1] + out.H[2] + Scalar(mpq_class(2, 3));
  return out;
}

}  // namespace lsharp
