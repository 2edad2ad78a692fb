#include "lsharp/numkern/series.hpp"

#include "lsharp/numkern/bernoulli.hpp"

namespace lsharp {

Scalar bernoulli_poly(long n, const Scalar& x) {
  if (x.is_exact()) return bernoulli_poly(n, x.exact());
  return bernoulli_poly(n, x.to_complex());
}

StirlingExpansion stirling_series(const mpq_class& lambda, const Scalar& mu, long order) {
  if (lambda <= 0) throw DomainError("stirling_series: lambda must be positive");
  AsymSeries<Scalar> s(order);
  mpq_class lam_pow = lambda;
  for (long m = 1; m <= order; ++m) {
    mpq_class c(1, m * (m + 1));
    c /= lam_pow;
    if ((m + 1) % 2 != 0) c = -c;
    s[m] = bernoulli_poly(m + 1, mu) * Scalar(c);
    lam_pow *= lambda;
  }
  return {lambda, mu, std::move(s)};
}

BigComplex StirlingExpansion::eval_log(const BigComplex& z) const {
  const BigFloat lam(lambda);
  const BigComplex lz = log(z);
  const BigComplex m = mu.to_complex() - BigComplex(BigFloat(0.5), BigFloat(0));
  BigComplex r = lam * z * lz + (lam * log(lam) - lam) * z + m * (lz + BigComplex(log(lam))) +
                 BigComplex(log(BigFloat::pi() * BigFloat(2)) / BigFloat(2));
  return r + series.eval(BigComplex(BigFloat(1), BigFloat(0)) / z);
}

}  // namespace lsharp
