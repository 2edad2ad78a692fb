#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lsharp/numkern/bigfloat.hpp"
#include "lsharp/numkern/scalar.hpp"

namespace lsharp {

/// Positive real Q. Exact form is Π p^{e_p} · π^{f} with rational exponents,
/// which covers √u·π^{v/2} and stays closed under Q ↦ 2^λ Q. Otherwise a float.
class QFactor {
 public:
  QFactor() = default;  ///< Q = 1
  /// √u · π^{v/2}
  static QFactor from_uv(const mpq_class& u, long v);
  static QFactor from_numeric(const BigFloat& value);

  bool is_exact() const noexcept { return !numeric_.has_value(); }
  const std::map<long, mpq_class>& prime_exponents() const noexcept { return primes_; }
  const mpq_class& pi_exponent() const noexcept { return pi_exp_; }

  /// When exact and expressible as √u·π^{v/2} with rational u, integer v.
  std::optional<std::pair<mpq_class, long>> as_uv() const;

  BigFloat value() const;
  BigFloat log_value() const;

  /// Q · p^e (exact stays exact).
  QFactor times_prime_power(long p, const mpq_class& e) const;

  friend bool operator==(const QFactor& a, const QFactor& b);

 private:
  std::map<long, mpq_class> primes_;
  mpq_class pi_exp_;
  std::optional<BigFloat> numeric_;
};

/// One Γ(λs + μ).
struct GammaTerm {
  mpq_class lambda;
  Scalar mu;
};

/// γ(s) = Q^s Π Γ(λ_j s + μ_j) together with the root number ω of
/// F(s)γ(s) = ω γ̄(1-s) F̄(1-s). ω is absent for virtual factors.
struct GammaFactor {
  QFactor Q;
  std::vector<GammaTerm> terms;
  std::optional<Scalar> omega;

  long r() const noexcept { return static_cast<long>(terms.size()); }
  bool is_exact() const;

  /// InvalidGammaFactor unless λ_j > 0, Re μ_j ≥ 0, |ω| = 1.
  void validate() const;
};

/// Factor p^a as prime exponents; throws DomainError for a ≤ 0.
std::map<long, mpq_class> factor_rational(const mpq_class& a);

/// Parse "p/q", "-7" (exact). Returns nullopt for anything else.
std::optional<mpq_class> parse_rational(const std::string& text);

}  // namespace lsharp
