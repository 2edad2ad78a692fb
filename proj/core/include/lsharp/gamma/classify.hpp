#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsharp/gamma/gamma_factor.hpp"
#include "lsharp/numkern/scalar.hpp"

namespace lsharp {

enum class CaseKind { Hecke, ZetaSquared, Maass, EmptyClass };

const char* case_name(CaseKind k) noexcept;

struct Classification {
  CaseKind kind = CaseKind::EmptyClass;
  long weight = 0;             ///< Hecke
  Scalar eigenvalue;           ///< Maass: (1 - 2χ)/4 = 1/4 + κ²
  int parity = -1;             ///< Maass: (1 - ω_F)/2
  std::string reason;          ///< EmptyClass
  Scalar chi;
  Scalar theta;                ///< shift removed before classifying
  std::vector<std::string> flags;
};

/// dim S_k(SL_2(Z)).
long cusp_form_dimension(long k) noexcept;

/// Single functional equation: case split on χ after normalizing the shift.
Classification classify(const GammaFactor& g);

struct PairClassification {
  Classification base;
  /// Coefficient relation between F and G, e.g. "g = i^k conj(omega) f".
  std::string relation;
  Scalar relation_factor;      ///< i^k ω̄, ω̄ or (-1)^ε ω̄
  std::string hpm_recipe;
};

/// F(s)γ(s) = ω γ̄(1-s) Ḡ(1-s) with a second series G.
PairClassification classify_pair(const GammaFactor& g, const Scalar& omega);

}  // namespace lsharp
