#include "lsharp/gamma/classify.hpp"

#include <cmath>

#include "lsharp/error.hpp"
#include "lsharp/gamma/invariants.hpp"
#include "lsharp/gamma/transforms.hpp"

namespace lsharp {

namespace {

// Tolerance 10^{-P/2} for numeric γ-data, P the caller's working precision.
thread_local long t_outer_bits = kDefaultPrecisionBits;

BigFloat numeric_tolerance() { return pow10(-static_cast<double>(t_outer_bits) / 2.0); }

struct Checked {
  GammaFactor g;
  Scalar theta;
  InvariantSet inv;
  std::vector<std::string> flags;
};

Checked check_shape(const GammaFactor& input) {
  t_outer_bits = working_precision();
  PrecisionScope scope(bits_for_tolerance(t_outer_bits, 2));
  ShiftResult shifted = normalize_shift(input);
  InvariantSet inv = invariants(shifted.g, 2);
  if (inv.degree != 2) throw NotDegreeTwo("degree is " + inv.degree.get_str() + ", expected 2");

  const BigFloat tol = numeric_tolerance();
  if (inv.conductor.is_exact()) {
    if (!(inv.conductor.exact() == ExactScalar(1L))) {
      throw NotConductorOne("conductor is " + inv.conductor.to_string() + ", expected 1");
    }
  } else if (abs(inv.conductor.to_complex() - BigComplex(BigFloat(1))) > tol) {
    throw NotConductorOne("conductor is " + inv.conductor.to_string(30) + ", expected 1");
  }
  if (inv.chi.is_exact()) {
    if (!inv.chi.exact().is_rational()) throw ChiNotReal("chi = " + inv.chi.to_string());
  } else {
    const BigComplex c = inv.chi.to_complex();
    if (abs(c.im) > tol * max(abs(c.re), BigFloat(1))) throw ChiNotReal("chi = " + inv.chi.to_string(30));
    inv.chi = BigComplex(c.re);
  }
  auto flags = std::move(shifted.flags);
  for (auto& f : inv.flags) flags.push_back(f);
  return {std::move(shifted.g), std::move(shifted.theta), std::move(inv), std::move(flags)};
}

// sign of χ with the numeric tolerance
int chi_sign(const Scalar& chi) {
  if (chi.is_exact()) return sgn(chi.exact().rational());
  const BigFloat c = chi.to_complex().re;
  if (abs(c) <= numeric_tolerance()) return 0;
  return c.sign();
}

// k = 1 + √(2χ) when it is an integer.
std::optional<long> hecke_weight(const Scalar& chi) {
  if (chi.is_exact()) {
    const mpq_class two_chi = 2 * chi.exact().rational();
    mpz_class n = two_chi.get_num(), d = two_chi.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) {
      return std::nullopt;
    }
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    if (rd != 1 || !rn.fits_slong_p()) return std::nullopt;
    return 1 + rn.get_si();
  }
  const BigFloat k = BigFloat(1) + sqrt(BigFloat(2) * chi.to_complex().re);
  const BigFloat kr = round(k);
  if (abs(k - kr) > numeric_tolerance() * k) return std::nullopt;
  return kr.to_long();
}

Classification decide(Checked& c, bool need_root_number, std::optional<int> parity_override) {
  Classification out;
  out.chi = c.inv.chi;
  out.theta = c.theta;
  out.flags = c.flags;
  const int s = chi_sign(out.chi);
  if (s > 0) {
    const auto k = hecke_weight(out.chi);
    if (!k) {
      out.kind = CaseKind::EmptyClass;
      out.reason = "1+sqrt(2chi) is not an integer";
    } else if (*k % 2 != 0) {
      out.kind = CaseKind::EmptyClass;
      out.reason = "weight " + std::to_string(*k) + " is odd";
    } else if (cusp_form_dimension(*k) < 1) {
      out.kind = CaseKind::EmptyClass;
      out.weight = *k;
      out.reason = "no level-1 cusp forms of weight " + std::to_string(*k);
      if (*k >= 12) out.flags.emplace_back("EvenWeightWithoutCuspForms");
    } else {
      out.kind = CaseKind::Hecke;
      out.weight = *k;
    }
    return out;
  }
  if (s == 0) {
    out.kind = CaseKind::ZetaSquared;
    return out;
  }
  out.kind = CaseKind::Maass;
  out.eigenvalue = (Scalar(1L) - Scalar(2L) * out.chi) / Scalar(4L);
  if (parity_override) {
    out.parity = *parity_override;
    return out;
  }
  if (!need_root_number) return out;
  if (!c.inv.root_number) throw ParityUndefined("Maass case needs omega to fix the parity");
  const Scalar& w = *c.inv.root_number;
  if (w.is_exact()) {
    if (w.exact() == ExactScalar(1L)) {
      out.parity = 0;
    } else if (w.exact() == ExactScalar(-1L)) {
      out.parity = 1;
    }
  } else {
    const BigComplex z = w.to_complex();
    const BigFloat tol = numeric_tolerance();
    if (abs(z - BigComplex(BigFloat(1))) <= tol) out.parity = 0;
    if (abs(z + BigComplex(BigFloat(1))) <= tol) out.parity = 1;
  }
  if (out.parity < 0) throw ParityUndefined("root number " + w.to_string(30) + " is not +1 or -1");
  return out;
}

}  // namespace

const char* case_name(CaseKind k) noexcept {
  switch (k) {
    case CaseKind::Hecke: return "Hecke";
    case CaseKind::ZetaSquared: return "ZetaSquared";
    case CaseKind::Maass: return "Maass";
    case CaseKind::EmptyClass: return "EmptyClass";
  }
  return "?";
}

long cusp_form_dimension(long k) noexcept {
  if (k < 4 || k % 2 != 0) return 0;
  return k % 12 == 2 ? k / 12 - 1 : k / 12;
}

Classification classify(const GammaFactor& g) {
  Checked c = check_shape(g);
  return decide(c, true, std::nullopt);
}

PairClassification classify_pair(const GammaFactor& g, const Scalar& omega) {
  GammaFactor h = g;
  h.omega = omega;
  Checked c = check_shape(h);

  // Parity from the γ-data: -a_0 = -i^r e^{-iπΣμ} is (-1)^ε for Maass-shaped data.
  std::optional<int> parity;
  if (chi_sign(c.inv.chi) < 0) {
    PrecisionScope scope(bits_for_tolerance(t_outer_bits, 2));
    BigComplex sum_mu(BigFloat(0), BigFloat(0));
    for (const auto& t : c.g.terms) sum_mu += t.mu.to_complex();
    BigComplex a0 = exp(BigComplex(sum_mu.im, -sum_mu.re) * BigFloat::pi());
    for (long j = 0; j < c.g.r(); ++j) a0 *= BigComplex::i();
    const BigComplex m = -a0;
    const BigFloat tol = numeric_tolerance();
    if (abs(m - BigComplex(BigFloat(1))) <= tol) parity = 0;
    if (abs(m + BigComplex(BigFloat(1))) <= tol) parity = 1;
    if (!parity) throw ParityUndefined("gamma data give -a_0 = " + m.to_string(20));
  }

  PairClassification out;
  out.base = decide(c, false, parity);
  const Scalar wbar = omega.conj();
  switch (out.base.kind) {
    case CaseKind::Hecke:
      out.relation = "g = i^k conj(omega) f";
      out.relation_factor = Scalar(ExactScalar(i_power(out.base.weight))) * wbar;
      break;
    case CaseKind::ZetaSquared:
      out.relation = "beta = alpha conj(omega)";
      out.relation_factor = wbar;
      break;
    case CaseKind::Maass:
      out.relation = "g = (-1)^epsilon conj(omega) f";
      out.relation_factor = Scalar(out.base.parity == 0 ? 1L : -1L) * wbar;
      break;
    case CaseKind::EmptyClass:
      out.relation = "none";
      out.relation_factor = Scalar(0L);
      break;
  }
  out.hpm_recipe =
      "H_pm(s) = c_pm (F(s) pm conj(G)(s)) with omega_pm = omega conj(c_pm)/c_pm; "
      "c_pm = 1/(a(n_pm) pm conj(b(n_pm))), n_pm least n with a(n) pm conj(b(n)) != 0";
  return out;
}

}  // namespace lsharp
