#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lsharp/gamma/gamma_factor.hpp"
#include "lsharp/numkern/scalar.hpp"

namespace lsharp {

struct InvariantSet {
  mpq_class degree;                   ///< d = 2Σλ
  Scalar conductor;                   ///< q = (2π)^d Q² Πλ^{2λ}
  bool conductor_exact = true;
  std::optional<Scalar> root_number;  ///< ω_F = ω Πλ^{-2i Im μ}; needs ω
  Scalar xi;                          ///< ξ = 2Σ(μ - 1/2) = η + i d θ
  Scalar eta;
  Scalar theta;
  std::vector<Scalar> H;              ///< H(n) = 2Σ B_n(μ)/λ^{n-1}
  Scalar chi;                         ///< H(1) + H(2) + 2/3
  std::vector<std::string> flags;
};

/// Computes every invariant; exact whenever the inputs allow it.
InvariantSet invariants(const GammaFactor& g, long n_max = 4);

/// χ alone (cheap path used by the classifiers).
Scalar chi_of(const GammaFactor& g);

}  // namespace lsharp
