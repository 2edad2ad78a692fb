#pragma once

#include <string>
#include <variant>
#include <vector>

#include "lsharp/gamma/gamma_factor.hpp"

namespace lsharp {

struct ShiftResult {
  GammaFactor g;
  Scalar theta;  ///< the shift that was removed
  std::vector<std::string> flags;
};

/// γ(s) ↦ Q^{iθ}γ(s - iθ): μ_j ↦ μ_j - iλ_jθ, ω ↦ ω Q^{2iθ}. Afterwards θ = 0.
ShiftResult normalize_shift(const GammaFactor& g);

struct DuplicateResult {
  GammaFactor g;
  BigComplex constant;  ///< c = 2^{μ_j - 1} π^{-1/2}, so γ = c·γ'
};

/// Legendre duplication of the j-th factor (1-based):
/// Γ(λs+μ) = c·2^{λs}Γ(λs/2 + μ/2)Γ(λs/2 + (μ+1)/2), ω ↦ ω·c̄/c.
DuplicateResult duplicate(const GammaFactor& g, long j);

struct HeckeKind {
  Scalar mu;
};
struct MaassKind {
  int epsilon = 0;
  Scalar kappa;
};
using VirtualKind = std::variant<HeckeKind, MaassKind>;

/// (2π)^{-s}Γ(s+μ) or π^{-s}Γ((s+ε+iκ)/2)Γ((s+ε-iκ)/2), without ω.
GammaFactor virtual_gamma(const VirtualKind& kind);

}  // namespace lsharp
