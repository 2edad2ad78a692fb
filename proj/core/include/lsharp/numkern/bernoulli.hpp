#pragma once

#include <vector>

#include <gmpxx.h>

#include "lsharp/numkern/bigfloat.hpp"
#include "lsharp/numkern/exact.hpp"

namespace lsharp {

/// B_n with B_1 = -1/2. Computed once and cached (thread-safe).
mpq_class bernoulli_number(long n);

/// Coefficients c[0..n] of B_n(x) = Σ c[k] x^k.
const std::vector<mpq_class>& bernoulli_poly_coeffs(long n);

/// B_n(x), exact for exact x.
ExactScalar bernoulli_poly(long n, const ExactScalar& x);
GaussRational bernoulli_poly(long n, const GaussRational& x);
BigComplex bernoulli_poly(long n, const BigComplex& x);

}  // namespace lsharp
