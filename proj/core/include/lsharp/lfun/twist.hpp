#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "lsharp/lfun/coeffs.hpp"
#include "lsharp/numkern/bigfloat.hpp"

namespace lsharp {

struct SpectrumResult {
  bool member = false;
  long m = 0;  ///< nearest integer to α²/4
};

/// α ∈ Spec(F) iff α²/4 is within tol of some m ≥ 1 with a(m) ≠ 0.
SpectrumResult spectrum_member(const CoefficientSource& src, const BigFloat& alpha, const BigFloat& tol);

struct TwistOptions {
  unsigned threads = 0;            ///< 0: hardware concurrency
  std::size_t block = 1u << 16;    ///< summation block length
  std::uint64_t max_terms = 4000000000ULL;
};

/// Precision (bits) of the double-double sums; sets the truncation point.
inline constexpr long kTwistPrecisionBits = 106;

/// n_cut = ⌈X·ln 10·P/3⌉ with P = kTwistPrecisionBits, so e^{-n/X} < 10^{-P/3} beyond it.
std::uint64_t twist_cutoff(double X);

/// Σ_{n ≤ n_cut} a(n) e^{-2πiα√n} e^{-n/X}.
std::complex<double> smoothed_twist(const CoefficientSource& src, const BigFloat& alpha, double X,
                                    const TwistOptions& opt = {});

/// The same sum for several X in one pass over n. Bit-identical for any
/// thread count: blocks are summed independently and reduced in index order.
std::vector<std::complex<double>> smoothed_twist_grid(const CoefficientSource& src, const BigFloat& alpha,
                                                      const std::vector<double>& xs, const TwistOptions& opt = {});

struct TwistExperiment {
  double alpha = 0;
  std::vector<double> xs;
  std::vector<std::complex<double>> sums;
  /// S ≈ c0 X^{3/4} + c1 X^{1/4} + c2 + c3 X^{-1/4}
  std::complex<double> c[4];
  double residual = 0;     ///< relative least-squares residual
  double condition = 0;    ///< of the column-scaled design matrix
  std::complex<double> x_term;  ///< X^1 coefficient of the augmented fit
  std::uint64_t terms = 0;

  bool in_spectrum = false;
  long m = 0;
  std::optional<std::complex<double>> predicted_c0, predicted_c1;
  std::optional<double> rel_error_c0, rel_error_c1;
  std::vector<std::string> flags;
};

/// Fits the model to sums already computed. FitUnstable if the scaled
/// condition number exceeds 1e8, UnexpectedPole if an X^1 term is needed.
TwistExperiment fit_twist(double alpha, const std::vector<double>& xs, const std::vector<std::complex<double>>& sums);

/// Sums, fit, and the predicted c0 = ρ0Γ(3/4), c1 = ρ1Γ(1/4) when α is in
/// the spectrum (d(1) from the source's γ-data unless given).
TwistExperiment residue_fit(const CoefficientSource& src, const BigFloat& alpha, const std::vector<double>& xs,
                            const TwistOptions& opt = {}, std::optional<double> d1 = std::nullopt);

/// n geometric points from lo to hi.
std::vector<double> geometric_grid(double lo, double hi, int n);

}  // namespace lsharp
