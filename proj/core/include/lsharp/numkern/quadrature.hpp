#pragma once

#include <functional>

#include "lsharp/numkern/bigfloat.hpp"

namespace lsharp {

using ComplexFn = std::function<BigComplex(const BigComplex&)>;

struct QuadratureResult {
  BigComplex value;
  BigFloat error_estimate;
  long evaluations = 0;
};

/// Adaptive Gauss–Legendre on [a, b] (real) for a complex-valued integrand.
QuadratureResult integrate(const std::function<BigComplex(const BigFloat&)>& f, const BigFloat& a,
                           const BigFloat& b, const BigFloat& tol, long max_evaluations = 200000);

/// ∫ f(s) ds along s = σ + it, t ∈ [t0, t1] (so ds = i dt).
/// NonConvergence when the evaluation budget is exhausted before tol.
QuadratureResult line_integral(const ComplexFn& f, const BigFloat& sigma, const BigFloat& t0,
                               const BigFloat& t1, const BigFloat& tol,
                               long max_evaluations = 200000);

}  // namespace lsharp
