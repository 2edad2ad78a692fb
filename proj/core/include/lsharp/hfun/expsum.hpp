#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lsharp/gamma/gamma_factor.hpp"
#include "lsharp/numkern/bigfloat.hpp"
#include "lsharp/numkern/exact.hpp"

namespace lsharp {

/// e^{iπ(p + iq)} with p reduced to [0, 1/2); the i-power removed by the
/// reduction is folded into the Gaussian-rational coefficient.
struct Phase {
  mpq_class p;
  mpq_class q;
  friend bool operator<(const Phase& a, const Phase& b) {
    return a.p != b.p ? a.p < b.p : a.q < b.q;
  }
  friend bool operator==(const Phase& a, const Phase& b) { return a.p == b.p && a.q == b.q; }
};

/// Coefficient Σ c_k e^{iπφ_k}: exact for exact μ, otherwise a float.
class PhasedCoeff {
 public:
  PhasedCoeff() = default;
  static PhasedCoeff exact_term(const GaussRational& c, const GaussRational& phase);
  static PhasedCoeff numeric(const BigComplex& v);

  bool is_exact() const noexcept { return !numeric_.has_value(); }
  /// Plain Gaussian rational (trivial phase only).
  std::optional<GaussRational> as_gaussian() const;
  const std::map<Phase, GaussRational>& parts() const noexcept { return parts_; }
  BigComplex value() const;
  bool is_zero() const;

  PhasedCoeff& operator+=(const PhasedCoeff& o);
  friend PhasedCoeff operator*(const PhasedCoeff& a, const PhasedCoeff& b);
  friend bool operator==(const PhasedCoeff& a, const PhasedCoeff& b);

  std::string to_string() const;

 private:
  void add(const Phase& ph, const GaussRational& c);
  std::map<Phase, GaussRational> parts_;
  std::optional<BigComplex> numeric_;
};

struct ExpTerm {
  mpq_class frequency;  ///< ω_j, term a_j e^{iπω_j s}
  PhasedCoeff coeff;
};

/// S(s) = Σ a_j e^{iπω_j s}, sorted by frequency, zero terms removed.
struct ExpSum {
  std::vector<ExpTerm> terms;
  std::vector<std::string> flags;

  long N() const noexcept { return static_cast<long>(terms.size()) - 1; }
  BigComplex eval(const BigComplex& s) const;
  /// Frequencies symmetric, endpoints ±1 and a_0 = a_N; ω_F compared when given.
  bool symmetric() const;
  bool endpoints_match(const std::optional<BigComplex>& omega_f) const;
  friend bool operator==(const ExpSum& a, const ExpSum& b);
};

/// 2^r Π sin(π(λ_j s + μ_j)) expanded into exponentials.
ExpSum s_expand(const GammaFactor& g);

/// Direct product 2^r Π sin(π(λ_j s + μ_j)).
BigComplex s_direct(const GammaFactor& g, const BigComplex& s);

struct RResult {
  BigComplex value;
  bool is_constant = false;        ///< S_F a constant multiple of S_γ, termwise
  bool n_at_most_two = false;      ///< N ≤ 2 for S_F
  std::optional<BigComplex> constant;
};

/// R(s) = S_F(s)/S_γ(s). DivisionByZero at zeros of S_γ.
RResult r_function(const GammaFactor& f, const GammaFactor& gv, const BigComplex& s);

}  // namespace lsharp
