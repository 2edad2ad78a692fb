#include "lsharp/hfun/hfunction.hpp"

#include "lsharp/numkern/precision.hpp"
#include "lsharp/numkern/special.hpp"

namespace lsharp {

BigComplex h_log(const GammaFactor& g, const BigComplex& s) {
  const BigComplex one(BigFloat(1), BigFloat(0));
  BigComplex acc = (one - s * BigFloat(2)) * g.Q.log_value();
  if (g.r() > 0) acc -= BigComplex(BigFloat(g.r()) * log(BigFloat::pi() * BigFloat(2)));
  for (const auto& t : g.terms) {
    const BigFloat lam(t.lambda);
    const BigComplex mu = t.mu.to_complex();
    acc += log_gamma((one - s) * lam + conj(mu));
    acc += log_gamma(one - s * lam - mu);
  }
  return acc;
}

BigComplex h_eval(const GammaFactor& g, const BigComplex& s) {
  const long out_bits = working_precision();
  BigComplex v;
  {
    PrecisionScope guard(out_bits + 32);
    v = exp(h_log(g, s.rounded(out_bits + 32)));
  }
  return v.rounded(out_bits);
}

}  // namespace lsharp
