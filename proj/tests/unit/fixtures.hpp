#pragma once

#include <gmpxx.h>

#include "lsharp/gamma/gamma_factor.hpp"
#include "lsharp/gamma/transforms.hpp"
#include "lsharp/numkern/scalar.hpp"

namespace fx {

inline mpq_class q(long a, long b = 1) {
  mpq_class r(a, b);
  r.canonicalize();
  return r;
}

inline lsharp::Scalar sq(long a, long b = 1) { return lsharp::Scalar(q(a, b)); }
inline lsharp::Scalar gauss(long a, long b, long c, long d) {
  return lsharp::Scalar(lsharp::GaussRational(q(a, b), q(c, d)));
}

inline lsharp::GammaFactor zeta2() {
  lsharp::GammaFactor g;
  g.Q = lsharp::QFactor::from_uv(q(1), -2);
  g.terms = {{q(1, 2), sq(0)}, {q(1, 2), sq(0)}};
  g.omega = sq(1);
  return g;
}

inline lsharp::GammaFactor hecke(const lsharp::Scalar& mu, long omega = 1) {
  lsharp::GammaFactor g = lsharp::virtual_gamma(lsharp::HeckeKind{mu});
  g.omega = lsharp::Scalar(omega);
  return g;
}

inline lsharp::GammaFactor maass(int eps, const lsharp::Scalar& kappa, long omega = 1) {
  lsharp::GammaFactor g = lsharp::virtual_gamma(lsharp::MaassKind{eps, kappa});
  g.omega = lsharp::Scalar(omega);
  return g;
}

inline bool exact_eq(const lsharp::Scalar& a, const lsharp::Scalar& b) {
  return a.is_exact() && b.is_exact() && a == b;
}

}  // namespace fx
