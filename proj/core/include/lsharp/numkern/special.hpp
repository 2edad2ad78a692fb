#pragma once

#include <gmpxx.h>

#include "lsharp/numkern/bigfloat.hpp"
#include "lsharp/numkern/exact.hpp"

namespace lsharp {

/// Principal branch of log Γ(z). PoleError within 1e-6 of a pole.
BigComplex log_gamma(const BigComplex& z);
BigComplex gamma(const BigComplex& z);
/// 1/Γ(z); entire, exactly zero at the poles of Γ.
BigComplex rgamma(const BigComplex& z);

/// Γ(n2/2) for integer n2 that is not a non-positive even number. Exact:
/// a rational, or a rational times π^{1/2}.
ExactScalar gamma_half_integer(long n2);

mpz_class factorial(long n);

/// top·(top-1)···(top-k+1)/k!
ExactScalar gen_binomial(const ExactScalar& top, long k);
GaussRational gen_binomial(const GaussRational& top, long k);
BigComplex gen_binomial(const BigComplex& top, long k);

}  // namespace lsharp
