#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lsharp/gamma/gamma_factor.hpp"
#include "lsharp/numkern/bigfloat.hpp"

namespace lsharp {

enum class SourceKind { DivisorD2, EtaPower24, EisensteinProduct, FileIngested };

/// How raw coefficients were turned into the a(n) of F.
struct Normalization {
  bool first_nonzero_to_one = true;
  mpq_class real_shift = 0;  ///< a(n) ↦ a(n) n^{-real_shift} (weight shift)
  BigFloat theta = BigFloat(0);  ///< a(n) ↦ a(n) n^{iθ}
};

/// Divisor sums σ_k(1..n_max).
std::vector<mpz_class> sigma_table(long k, long n_max);

/// d(n) for lo ≤ n < hi by a segmented sieve.
void divisor_counts(std::uint64_t lo, std::uint64_t hi, std::vector<std::uint32_t>& out);

/// τ(1..n_max) from q·(η³)^8 by the power recurrence, modulo two primes.
std::vector<mpz_class> ramanujan_tau(long n_max);

/// Dirichlet coefficients of one L-function. Generated kinds are exact;
/// FileIngested stores the decimal values it was given.
class CoefficientSource {
 public:
  static CoefficientSource divisor_d2();
  static CoefficientSource eta_power24();
  /// Δ·E_{k-12}, k ∈ {12, 16, 18, 20, 22, 26}.
  static CoefficientSource eisenstein_product(long k);
  static CoefficientSource file(const std::string& path);
  static CoefficientSource parse(const std::string& text, const std::string& origin = "<memory>");

  SourceKind kind() const noexcept { return kind_; }
  std::string name() const;
  const Normalization& normalization() const noexcept { return norm_; }
  long weight() const noexcept { return weight_; }
  /// Largest n this source can supply (0 = unbounded).
  long limit() const noexcept { return limit_; }

  /// Exact arithmetic coefficients before the weight shift (generated kinds).
  std::vector<mpq_class> exact(long n_max) const;
  /// a(1..n_max) with every normalization applied, index 0 holds a(1).
  std::vector<BigComplex> coeffs(long n_max) const;
  /// a(1..n_max) rounded to double, index 0 holds a(1).
  std::vector<std::complex<double>> coeffs_double(long n_max) const;
  bool nonzero(long m) const;

  /// γ-data of F when the source knows it (used for predicted residues).
  std::optional<GammaFactor> gamma() const;

 private:
  CoefficientSource() = default;
  void require(long n_max) const;

  SourceKind kind_ = SourceKind::DivisorD2;
  long weight_ = 0;
  long limit_ = 0;
  std::string origin_;
  Normalization norm_;
  std::shared_ptr<const std::vector<BigComplex>> file_values_;
};

}  // namespace lsharp
