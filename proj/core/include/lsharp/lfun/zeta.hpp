#pragma once

#include "lsharp/numkern/bigfloat.hpp"

namespace lsharp {

/// ζ(s) by Euler–Maclaurin, relative error below 10^{-P/2} for |Im s| ≤ 100.
/// PoleError within 1e-6 of s = 1.
BigComplex zeta_em(const BigComplex& s);

/// π^{-s}Γ(s/2)² ζ(s)² − π^{-(1-s)}Γ((1-s)/2)² ζ(1-s)².
BigComplex fe_residual_zeta2(const BigComplex& s);

}  // namespace lsharp
