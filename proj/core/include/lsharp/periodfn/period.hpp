#pragma once

#include <cstddef>

#include "lsharp/lfun/coeffs.hpp"
#include "lsharp/numkern/bigfloat.hpp"

namespace lsharp {

/// f(z) = Σ a(n) n^λ e(nz) for the a(n) of a coefficient source.
struct FourierSeries {
  CoefficientSource source;
  BigComplex lambda;
  /// declared bound |a(n) n^λ| ≤ C n^β, used for truncation
  double bound_c = 2.0;
  double bound_beta = 0.0;

  /// Holomorphic case: λ = (k-1)/2 from the source weight, or an explicit real λ.
  static FourierSeries holomorphic(const CoefficientSource& src);
  static FourierSeries with_lambda(const CoefficientSource& src, const BigComplex& lambda);
  /// Maass case λ = iκ (coefficients must come from a file).
  static FourierSeries maass(const CoefficientSource& src, const BigFloat& kappa);

  /// Smallest N with Σ_{n>N} C n^β e^{-2πny} below 10^{-P/3}.
  std::size_t cutoff(const BigFloat& y) const;
};

/// SlowConvergence for Im z < 1e-3.
BigComplex f_eval(const FourierSeries& fs, const BigComplex& z);

/// ψ(z) = f(z) - z^{-2λ-1} f(-1/z), principal branch on the upper half-plane.
BigComplex psi_eval(const FourierSeries& fs, const BigComplex& z);

/// ψ(z) - ψ(z+1) - (z+1)^{-2λ-1} ψ(z/(z+1)).
BigComplex three_term_residual(const FourierSeries& fs, const BigComplex& z);

/// E_{1/2-μ}(w) = Σ_{ℓ≥0} (-w)^ℓ / Γ(ℓ + 1/2 - μ).
BigComplex mittag_leffler(const BigFloat& mu, const BigComplex& w);

/// (1/2πi) ∫_{(1+δ)} w^{-s} / (cos(πs) Γ(1-s-μ)) ds, Re w > 0.
/// NonConvergence when |arg w| > π/2 - 0.1.
BigComplex j_contour(const BigFloat& mu, const BigComplex& w, const BigFloat& delta = BigFloat(0.25));

}  // namespace lsharp
