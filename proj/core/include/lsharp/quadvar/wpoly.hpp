#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "lsharp/numkern/exact.hpp"
#include "lsharp/numkern/scalar.hpp"

namespace lsharp {

/// Coefficient of ξ^k in (Σ_{j≥3} C(1/2, j) ξ^j)^ν; zero below k = 3ν.
mpq_class akv(long k, long nu);

/// A(ν, μ, k, ℓ, h) for μ + k even. A single π-monomial.
ExactScalar a_constant(long nu, long mu, long k, long ell, long h);

/// W_m(s, α) = Σ c · s^i α^h D_ℓ, with the structural invariants D_ℓ formal.
struct WPoly {
  struct Key {
    long s_deg;
    long alpha_deg;
    long ell;
    friend bool operator<(const Key& a, const Key& b) {
      return std::tie(a.s_deg, a.alpha_deg, a.ell) < std::tie(b.s_deg, b.alpha_deg, b.ell);
    }
  };

  long m = 0;
  std::map<Key, ExactScalar> terms;

  /// W_m(s, α) with s fixed: (α-degree, ℓ) ↦ coefficient.
  std::map<std::pair<long, long>, ExactScalar> at(const mpq_class& s) const;
  /// Fully numeric value with D_ℓ := d[ℓ].
  Scalar eval(const Scalar& s, const Scalar& alpha, const std::vector<Scalar>& d) const;
  long max_ell() const;
  long alpha_degree() const;
  std::string to_string() const;
};

/// Built once per m and shared.
std::shared_ptr<const WPoly> w_poly(long m);

/// s_ℓ = 3/4 - ℓ/2
mpq_class pole_point(long ell);

}  // namespace lsharp
