#pragma once

#include <string>
#include <vector>

#include "lsharp/gamma/gamma_factor.hpp"
#include "lsharp/numkern/bigfloat.hpp"
#include "lsharp/numkern/scalar.hpp"

namespace lsharp {

enum class StructuralMethod { Symbolic, Numeric };

/// h(s) ≈ c·(4π)^{2s-1}(2π)^{-1/2} Σ_ℓ d[ℓ] Γ(3/2 - 2s - ℓ), with d[0] = 1.
struct StructuralInvariants {
  Scalar c;
  std::vector<Scalar> d;  ///< d[0..L]
  long L = 0;
  StructuralMethod method = StructuralMethod::Symbolic;
  /// Numeric method only: empirical absolute errors of c and of each d[ℓ].
  BigFloat c_error;
  std::vector<BigFloat> d_error;
  std::vector<std::string> flags;
};

std::string method_name(StructuralMethod m);

/// Stirling expansion of every Γ in h, re-expanded in Γ(t-ℓ)/Γ(t), t = 3/2 - 2s.
/// PrefactorMismatch unless d = 2, q = 1 and Σ Im μ = 0.
StructuralInvariants structural_symbolic(const GammaFactor& g, long L);

/// Samples h on the negative real axis and fits the same expansion.
/// IllConditioned when the estimates do not stabilize.
StructuralInvariants structural_numeric(const GammaFactor& g, long L);

}  // namespace lsharp
