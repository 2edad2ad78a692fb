#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lsharp/numkern/exact.hpp"
#include "lsharp/numkern/scalar.hpp"

namespace lsharp {

/// Σ c_{ℓ,h} D_ℓ D_h. The first index comes from the D inside W_m, the
/// second from the explicit D_{M-m}; the pair is kept asymmetric.
using BilinearForm = std::map<std::pair<long, long>, ExactScalar>;

Scalar eval_bilinear(const BilinearForm& f, const std::vector<Scalar>& d);

/// Σ_{m=1..M} W_m(s_M, α)(-2πi)^m D_{M-m} α^m, keyed by α-degree.
struct ResidueIdentity {
  long M = 0;
  std::map<long, BilinearForm> coeffs;

  bool is_zero() const;
  /// Every α-coefficient evaluated with D_ℓ := d[ℓ].
  std::map<long, Scalar> eval(const std::vector<Scalar>& d) const;
};

ResidueIdentity residue_identity(long M);

struct QuadraticForm {
  long N = 0;
  BilinearForm alpha;     ///< α_{ℓ,h}, ℓ + h ≤ N
  ExactScalar scale;      ///< the raw α_{0,N} + α_{N,0} divided out
  bool normalized = false;

  Scalar eval(const std::vector<Scalar>& d) const { return eval_bilinear(alpha, d); }
  std::string to_string() const;
};

/// α^{2N} coefficient of residue_identity(2N), normalized so that
/// α_{0,N} + α_{N,0} = 1. StructuralViolation on a term with ℓ + h > N,
/// a non-real coefficient or mixed π-grades; NormalizationFailure if the
/// D_0 D_N coefficient vanishes.
QuadraticForm quad_form(long N);

/// Same extraction without normalization and without the N ≥ 2 requirement.
QuadraticForm quad_form_raw(long N);

/// Polynomial Σ c_j X^j with exact coefficients.
struct ExactPoly {
  std::vector<ExactScalar> c;

  long degree() const;
  ExactScalar eval(const ExactScalar& x) const;
  std::string to_string(const std::string& var = "X") const;
  friend ExactPoly operator+(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator*(const ExactScalar& s, const ExactPoly& a);
  friend bool operator==(const ExactPoly& a, const ExactPoly& b);
};

/// E_ℓ(d_1) for ℓ = 0..Lmax (E_0 = 1, E_1 = X).
struct RecursionE {
  std::vector<ExactPoly> E;
};

RecursionE recursion(long Lmax);

enum class PolyKind { Hecke, Maass };

struct ExtractedPoly {
  PolyKind kind;
  long ell = 0;
  std::vector<mpq_class> coeffs;  ///< ascending powers of μ (Hecke) or κ (Maass)

  mpq_class eval(const mpq_class& x) const;
  std::string to_string() const;
};

/// Interpolates d[ℓ] as a polynomial in μ or κ from 2ℓ+3 exact samples and
/// checks 3 more; for Maass both ε are sampled and must agree.
/// InterpolationMismatch otherwise.
ExtractedPoly poly_extract(PolyKind kind, long ell);

}  // namespace lsharp
