#include "lsharp/lfun/zeta.hpp"

#include <cmath>

#include "lsharp/error.hpp"
#include "lsharp/numkern/bernoulli.hpp"
#include "lsharp/numkern/precision.hpp"
#include "lsharp/numkern/special.hpp"

namespace lsharp {

namespace {

// Σ_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2 + Σ_k B_{2k}/(2k)! s(s+1)···(s+2k-2) N^{-s-2k+1}
BigComplex em_sum(const BigComplex& s, long N, const BigFloat& tol, bool& converged) {
  const BigComplex one(1);
  BigComplex acc(BigFloat(0), BigFloat(0));
  for (long n = 1; n < N; ++n) acc += exp(-s * log(BigFloat(n)));
  const BigFloat lnN = log(BigFloat(N));
  const BigComplex Ns = exp(-s * lnN);  // N^{-s}
  acc += Ns * BigFloat(N) / (s - one);
  acc += Ns / BigFloat(2);

  BigComplex rising = s;  // s(s+1)···(s+2k-2)
  BigComplex npow = Ns / BigFloat(N);  // N^{-s-1}
  const BigFloat inv_n2 = BigFloat(1) / (BigFloat(N) * BigFloat(N));
  mpz_class fact = 2;  // (2k)!
  BigFloat last(0);
  converged = false;
  for (long k = 1; k < 4 * N; ++k) {
    const BigComplex term = rising * npow * BigFloat(bernoulli_number(2 * k) / mpq_class(fact));
    acc += term;
    const BigFloat mag = abs(term);
    if (mag <= tol * max(abs(acc), abs(Ns))) {
      converged = true;
      break;
    }
    if (k > 2 && mag > last) break;  // asymptotic terms started growing
    last = mag;
    rising *= (s + BigComplex(BigFloat(2 * k - 1))) * (s + BigComplex(BigFloat(2 * k)));
    npow *= inv_n2;
    fact *= (2 * k + 1) * (2 * k + 2);
  }
  return acc;
}

}  // namespace

BigComplex zeta_em(const BigComplex& s) {
  const BigComplex one(1);
  if (abs(s - one) < BigFloat(1e-6)) throw PoleError("zeta: s = 1");
  const long out_bits = working_precision();
  const double digits = static_cast<double>(out_bits) / 2.0;
  const double sigma = s.re.to_double(), t = std::abs(s.im.to_double());

  long N = static_cast<long>(std::ceil(digits * 0.5 + t * 0.5)) + 10;
  for (int attempt = 0; attempt < 8; ++attempt, N *= 2) {
    // cancellation in the partial sum when Re s < 1
    const double guard = std::max(0.0, 1.0 - sigma) * std::log2(static_cast<double>(N)) + 32.0;
    BigComplex v;
    bool ok = false;
    {
      PrecisionScope scope(bits_for_tolerance(out_bits, 2) + static_cast<long>(guard));
      const BigFloat tol = pow10(-digits - 4.0);
      v = em_sum(s.rounded(working_precision()), N, tol, ok);
    }
    if (ok) return v;
  }
  throw NonConvergence("zeta_em: Euler-Maclaurin did not converge");
}

BigComplex fe_residual_zeta2(const BigComplex& s) {
  const long out_bits = working_precision();
  BigComplex r;
  {
    PrecisionScope scope(bits_for_tolerance(out_bits, 2));
    const BigComplex one(1);
    auto side = [](const BigComplex& z) {
      const BigComplex g = gamma(z / BigFloat(2));
      const BigComplex zz = zeta_em(z);
      return exp(-z * log(BigFloat::pi())) * g * g * zz * zz;
    };
    const BigComplex sr = s.rounded(working_precision());
    r = side(sr) - side(one - sr);
  }
  return r;
}

}  // namespace lsharp
