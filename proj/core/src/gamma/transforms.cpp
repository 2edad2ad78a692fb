#include "lsharp/gamma/transforms.hpp"

#include "lsharp/error.hpp"
#include "lsharp/gamma/invariants.hpp"

namespace lsharp {

ShiftResult normalize_shift(const GammaFactor& g) {
  g.validate();
  mpq_class lam_sum = 0;
  Scalar im_sum(0L);
  for (const auto& t : g.terms) {
    lam_sum += t.lambda;
    im_sum += t.mu.imag_part();
  }
  ShiftResult out{g, Scalar(0L), {}};
  if (g.terms.empty() || im_sum.is_zero()) return out;

  const Scalar theta = im_sum / Scalar(lam_sum);
  out.theta = theta;
  const Scalar i_theta = Scalar(ExactScalar::i()) * theta;
  for (auto& t : out.g.terms) {
    t.mu -= Scalar(t.lambda) * i_theta;
    const bool negative =
        t.mu.is_exact() ? t.mu.exact().real_part().is_zero() == false &&
                              t.mu.exact().real_part().rational() < 0
                        : t.mu.to_complex().re.sign() < 0;
    if (negative) out.flags.emplace_back("NegativeRealPart");
  }
  if (g.omega) {
    const bool trivial_q = g.Q.is_exact() && g.Q.prime_exponents().empty() && g.Q.pi_exponent() == 0;
    if (!trivial_q) {
      const BigFloat phase = BigFloat(2) * theta.to_complex().re * g.Q.log_value();
      out.g.omega = *g.omega * Scalar(expi(phase));
    }
  }
  return out;
}

DuplicateResult duplicate(const GammaFactor& g, long j) {
  g.validate();
  if (j < 1 || j > g.r()) throw DomainError("duplicate: factor index out of range");
  const GammaTerm t = g.terms[static_cast<std::size_t>(j - 1)];

  DuplicateResult out{g, BigComplex()};
  out.g.Q = g.Q.times_prime_power(2, t.lambda);
  auto& terms = out.g.terms;
  terms.erase(terms.begin() + (j - 1));
  const mpq_class half_lambda = t.lambda / 2;
  const Scalar half(mpq_class(1, 2));
  terms.insert(terms.begin() + (j - 1), GammaTerm{half_lambda, t.mu * half + half});
  terms.insert(terms.begin() + (j - 1), GammaTerm{half_lambda, t.mu * half});

  const BigComplex mu = t.mu.to_complex();
  const BigComplex one(BigFloat(1), BigFloat(0));
  out.constant = pow(BigFloat(2), mu - one) / sqrt(BigFloat::pi());

  if (g.omega) {
    // c̄/c = 2^{μ̄ - μ} = 2^{-2i Im μ}
    const Scalar y = t.mu.imag_part();
    if (!y.is_zero()) {
      const BigFloat phase = BigFloat(-2) * y.to_complex().re * log(BigFloat(2));
      out.g.omega = *g.omega * Scalar(expi(phase));
    }
  }
  return out;
}

GammaFactor virtual_gamma(const VirtualKind& kind) {
  GammaFactor g;
  if (const auto* h = std::get_if<HeckeKind>(&kind)) {
    const bool positive = h->mu.is_exact() ? h->mu.exact().is_rational() && h->mu.exact().rational() > 0
                                           : h->mu.is_real() && h->mu.to_complex().re.sign() > 0;
    if (!positive) throw DomainError("virtual_gamma: Hecke mu must be a positive real");
    g.Q = QFactor::from_uv(mpq_class(1, 4), -2);  // (2π)^{-1}
    g.terms.push_back({mpq_class(1), h->mu});
  } else {
    const auto& m = std::get<MaassKind>(kind);
    if (m.epsilon != 0 && m.epsilon != 1) throw DomainError("virtual_gamma: epsilon must be 0 or 1");
    const bool nonneg = m.kappa.is_exact() ? m.kappa.exact().is_rational() && m.kappa.exact().rational() >= 0
                                           : m.kappa.is_real() && m.kappa.to_complex().re.sign() >= 0;
    if (!nonneg) throw DomainError("virtual_gamma: kappa must be a non-negative real");
    g.Q = QFactor::from_uv(mpq_class(1), -2);  // π^{-1}
    const Scalar half(mpq_class(1, 2));
    const Scalar e(static_cast<long>(m.epsilon));
    const Scalar ik = Scalar(ExactScalar::i()) * m.kappa;
    g.terms.push_back({mpq_class(1, 2), (e + ik) * half});
    g.terms.push_back({mpq_class(1, 2), (e - ik) * half});
  }
  return g;
}

}  // namespace lsharp
