#include "lsharp/hfun/structural.hpp"

#include <cmath>
#include <map>

#include "lsharp/error.hpp"
#include "lsharp/gamma/invariants.hpp"
#include "lsharp/hfun/hfunction.hpp"
#include "lsharp/numkern/linalg.hpp"
#include "lsharp/numkern/precision.hpp"
#include "lsharp/numkern/series.hpp"
#include "lsharp/numkern/special.hpp"

namespace lsharp {

namespace {

using Series = AsymSeries<Scalar>;

// The two Γ arguments of h contributed by one factor, written as a·t + b.
struct Arg {
  mpq_class a;
  Scalar b;
};

std::vector<Arg> h_arguments(const GammaFactor& g) {
  std::vector<Arg> out;
  for (const auto& t : g.terms) {
    const mpq_class a = t.lambda / 2;
    out.push_back({a, Scalar(mpq_class(t.lambda / 4)) + t.mu.conj()});
    out.push_back({a, Scalar(mpq_class(1 - 3 * t.lambda / 4)) - t.mu});
  }
  return out;
}

// Π λ^{-2i Im μ}, exact 1 when the Im μ cancel inside every λ class.
Scalar expected_prefactor(const GammaFactor& g) {
  std::map<mpq_class, Scalar> im_by_lambda;
  for (const auto& t : g.terms) im_by_lambda[t.lambda] += t.mu.imag_part();
  BigComplex acc(BigFloat(1), BigFloat(0));
  bool trivial = true;
  for (const auto& [lam, im] : im_by_lambda) {
    if (im.is_zero() || lam == 1) continue;
    trivial = false;
    const BigComplex e = im.to_complex() * BigFloat(-2) * log(BigFloat(lam));
    acc *= expi(e.re) * exp(-e.im);
  }
  if (trivial) return Scalar(1L);
  return Scalar(acc);
}

// Numeric comparisons run at the precision a 10^{-P/2} tolerance needs.
void check_prefactor(const GammaFactor& g) {
  const long bits = working_precision();
  PrecisionScope scope(bits_for_tolerance(bits, 2));
  const BigFloat tol = pow10(-static_cast<double>(bits) / 2.0);

  mpq_class lam_sum = 0;
  for (const auto& t : g.terms) lam_sum += t.lambda;
  if (lam_sum != 1) {
    throw PrefactorMismatch("t log t term does not cancel: degree is " + mpq_class(2 * lam_sum).get_str());
  }

  Scalar im_sum;
  for (const auto& t : g.terms) im_sum += t.mu.imag_part();
  if (im_sum.is_exact() ? !im_sum.is_zero() : abs(im_sum.to_complex()) > tol) {
    throw PrefactorMismatch("log t term does not cancel: sum of Im mu is " + im_sum.to_string(20));
  }

  const InvariantSet inv = invariants(g, 2);
  const bool q_one = inv.conductor.is_exact() ? inv.conductor == Scalar(1L)
                                               : abs(inv.conductor.to_complex() - BigComplex(1)) <= tol;
  if (!q_one) throw PrefactorMismatch("t term does not cancel: conductor is " + inv.conductor.to_string(20));
}

// Constant term of log(r/Γ(t)) from the general formula, before any
// simplification that assumes q = 1.
BigComplex constant_term(const GammaFactor& g) {
  BigComplex acc = BigComplex(-g.Q.log_value() / BigFloat(2) - log(BigFloat::pi() * BigFloat(4)) / BigFloat(2));
  for (const auto& arg : h_arguments(g)) {
    acc += (arg.b.to_complex() - BigComplex(BigFloat(0.5), BigFloat(0))) * log(BigFloat(arg.a));
  }
  return acc;
}

// u^ℓ Π_{j=1..ℓ} (1 - j u)^{-1} truncated at order L.
Series peel_basis(long ell, long L) {
  Series b(L);
  if (ell > L) return b;
  std::vector<mpq_class> c(static_cast<std::size_t>(L + 1), 0);
  c[0] = 1;
  for (long j = 1; j <= ell; ++j) {
    // multiply by 1/(1 - j u)
    for (long k = 1; k <= L; ++k) c[k] += j * c[k - 1];
  }
  for (long k = 0; k + ell <= L; ++k) b[k + ell] = Scalar(c[k]);
  return b;
}

}  // namespace

std::string method_name(StructuralMethod m) { return m == StructuralMethod::Symbolic ? "symbolic" : "numeric"; }

StructuralInvariants structural_symbolic(const GammaFactor& g, long L) {
  if (L < 0) throw DomainError("structural_symbolic: negative order");
  check_prefactor(g);

  const long bits = working_precision();
  Scalar expected;
  {
    PrecisionScope scope(bits_for_tolerance(bits, 2));
    expected = expected_prefactor(g);
    const BigFloat tol = pow10(-static_cast<double>(bits) / 2.0);
    const BigComplex c_num = exp(constant_term(g));
    if (abs(c_num - expected.to_complex()) > tol) {
      throw PrefactorMismatch("constant " + c_num.to_string(20) + " differs from the expected prefactor");
    }
  }
  if (!expected.is_exact()) expected = Scalar(expected.to_complex().rounded(bits));

  // Σ log Γ(a t + b) - log Γ(t), series part only
  Series total = stirling_series(mpq_class(1), Scalar(0L), L).series * Scalar(-1L);
  for (const auto& arg : h_arguments(g)) total += stirling_series(arg.a, arg.b, L).series;
  Series rem = total.exp();

  StructuralInvariants out;
  out.c = expected;
  out.L = L;
  out.method = StructuralMethod::Symbolic;
  for (long ell = 0; ell <= L; ++ell) {
    const Scalar d = rem[ell];
    out.d.push_back(d);
    if (!d.is_zero()) rem -= peel_basis(ell, L) * d;
  }
  out.c_error = BigFloat(0);
  out.d_error.assign(static_cast<std::size_t>(L + 1), BigFloat(0));
  return out;
}

namespace {

struct Fit {
  BigComplex c;
  std::vector<BigComplex> d;
};

// Collocation in the basis Γ(t-ℓ)/Γ(t) at t = 3/2 + 2T over K points,
// T geometric over two decades from 10^tau.
Fit collocation_fit(const GammaFactor& g, long K, double tau) {
  const BigFloat log2pi_half = log(BigFloat::pi() * BigFloat(2)) / BigFloat(2);
  const BigFloat log4pi = log(BigFloat::pi() * BigFloat(4));
  const BigFloat t_ref = pow10(tau);

  ComplexMatrix a(static_cast<std::size_t>(K), std::vector<BigComplex>(static_cast<std::size_t>(K)));
  std::vector<BigComplex> y(static_cast<std::size_t>(K));
  for (long i = 0; i < K; ++i) {
    // the 1/3 keeps every sample off integers
    const BigFloat T = pow10(tau + 2.0 * static_cast<double>(i) / static_cast<double>(K - 1)) + BigFloat(mpq_class(1, 3));
    const BigComplex s(-T, BigFloat(0));
    const BigFloat t = BigFloat(mpq_class(3, 2)) + T * BigFloat(2);
    const BigComplex lr = h_log(g, s) + BigComplex(log2pi_half) + BigComplex((BigFloat(1) + T * BigFloat(2)) * log4pi) -
                          log_gamma(BigComplex(t));
    y[static_cast<std::size_t>(i)] = exp(lr);
    // column ℓ scaled by t_ref^ℓ
    BigFloat basis(1);
    for (long ell = 0; ell < K; ++ell) {
      if (ell > 0) basis *= t_ref / (t - BigFloat(ell));
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(ell)] = BigComplex(basis);
    }
  }
  std::vector<BigComplex> x = solve_linear(std::move(a), std::move(y));
  Fit f;
  f.c = x[0];
  BigFloat scale(1);
  for (long ell = 0; ell < K; ++ell) {
    if (ell > 0) scale *= t_ref;
    f.d.push_back(x[static_cast<std::size_t>(ell)] * scale / x[0]);
  }
  return f;
}

}  // namespace

StructuralInvariants structural_numeric(const GammaFactor& g, long L) {
  if (L < 0) throw DomainError("structural_numeric: negative order");
  check_prefactor(g);

  const long out_bits = working_precision();
  const double digits = static_cast<double>(out_bits) / 4.0;  // target 10^{-P/4}
  const long extra = 6;
  const double tau = std::ceil((digits + 16.0) / static_cast<double>(extra));
  const double work_digits = digits + static_cast<double>(L) * (tau + 2.5) + 20.0;
  const long bits = static_cast<long>(std::ceil(work_digits * std::log2(10.0))) + 128 + 64;

  Fit f1, f2;
  {
    PrecisionScope scope(bits);
    f1 = collocation_fit(g, L + extra, tau);
    f2 = collocation_fit(g, L + extra + 2, tau);
  }

  StructuralInvariants out;
  out.L = L;
  out.method = StructuralMethod::Numeric;
  out.c = Scalar(f2.c.rounded(out_bits));
  out.c_error = abs(f2.c - f1.c).rounded(out_bits);
  const BigFloat limit = pow10(-digits / 2.0);
  for (long ell = 0; ell <= L; ++ell) {
    const auto& v2 = f2.d[static_cast<std::size_t>(ell)];
    const BigFloat err = abs(v2 - f1.d[static_cast<std::size_t>(ell)]);
    if (err > limit * max(BigFloat(1), abs(v2))) {
      throw IllConditioned("structural_numeric: d[" + std::to_string(ell) + "] did not stabilize (change " +
                           err.to_string(6) + ")");
    }
    out.d.push_back(Scalar(v2.rounded(out_bits)));
    out.d_error.push_back(err.rounded(out_bits));
  }
  if (out.c_error > limit * abs(out.c.to_complex())) {
    throw IllConditioned("structural_numeric: prefactor did not stabilize");
  }
  return out;
}

}  // namespace lsharp
