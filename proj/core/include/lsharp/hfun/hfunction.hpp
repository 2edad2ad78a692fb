#pragma once

#include "lsharp/gamma/gamma_factor.hpp"
#include "lsharp/numkern/bigfloat.hpp"

namespace lsharp {

/// h(s) = (2π)^{-r} Q^{1-2s} Π Γ(λ_j(1-s) + μ̄_j) Γ(1 - λ_j s - μ_j).
/// PoleError near a pole of any factor.
BigComplex h_eval(const GammaFactor& g, const BigComplex& s);

/// log h(s), summed from principal log Γ values (not reduced mod 2πi).
BigComplex h_log(const GammaFactor& g, const BigComplex& s);

}  // namespace lsharp
