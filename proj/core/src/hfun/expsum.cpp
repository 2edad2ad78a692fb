#include "lsharp/hfun/expsum.hpp"

#include <algorithm>

#include "lsharp/error.hpp"

namespace lsharp {

namespace {

// p ↦ (p0, m) with p = p0 + m/2, 0 ≤ p0 < 1/2
std::pair<mpq_class, long> reduce(const mpq_class& p) {
  const mpq_class twice = 2 * p;
  mpz_class m;
  mpz_fdiv_q(m.get_mpz_t(), twice.get_num_mpz_t(), twice.get_den_mpz_t());
  mpq_class p0 = p - mpq_class(m, 2);
  p0.canonicalize();
  return {p0, m.get_si()};
}

BigFloat coefficient_scale(const ExpSum& e, const BigComplex& s) {
  BigFloat scale(0);
  for (const auto& t : e.terms) {
    const BigFloat w = BigFloat(t.frequency) * BigFloat::pi();
    scale += abs(t.coeff.value()) * exp(-(w * s.im));
  }
  return scale;
}

BigFloat zero_tolerance() { return ldexp(BigFloat(1), 32 - working_precision()); }

}  // namespace

PhasedCoeff PhasedCoeff::exact_term(const GaussRational& c, const GaussRational& phase) {
  PhasedCoeff r;
  r.add(Phase{phase.re, phase.im}, c);
  return r;
}

PhasedCoeff PhasedCoeff::numeric(const BigComplex& v) {
  PhasedCoeff r;
  r.numeric_ = v;
  return r;
}

void PhasedCoeff::add(const Phase& ph, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [p0, m] = reduce(ph.p);
  const Phase key{p0, ph.q};
  const GaussRational folded = c * i_power(m);
  auto [it, fresh] = parts_.try_emplace(key, folded);
  if (!fresh) {
    it->second += folded;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

std::optional<GaussRational> PhasedCoeff::as_gaussian() const {
  if (!is_exact()) return std::nullopt;
  if (parts_.empty()) return GaussRational(0);
  if (parts_.size() == 1 && parts_.begin()->first == Phase{0, 0}) return parts_.begin()->second;
  return std::nullopt;
}

BigComplex PhasedCoeff::value() const {
  if (numeric_) return *numeric_;
  BigComplex acc(BigFloat(0), BigFloat(0));
  for (const auto& [ph, c] : parts_) {
    BigComplex v = c.to_complex();
    if (ph.p != 0 || ph.q != 0) {
      const BigFloat pi = BigFloat::pi();
      v *= polar(exp(-BigFloat(ph.q) * pi), BigFloat(ph.p) * pi);
    }
    acc += v;
  }
  return acc;
}

bool PhasedCoeff::is_zero() const { return numeric_ ? numeric_->is_zero() : parts_.empty(); }

PhasedCoeff& PhasedCoeff::operator+=(const PhasedCoeff& o) {
  if (is_exact() && o.is_exact()) {
    for (const auto& [ph, c] : o.parts_) add(ph, c);
  } else {
    numeric_ = value() + o.value();
    parts_.clear();
  }
  return *this;
}

PhasedCoeff operator*(const PhasedCoeff& a, const PhasedCoeff& b) {
  if (!a.is_exact() || !b.is_exact()) return PhasedCoeff::numeric(a.value() * b.value());
  PhasedCoeff r;
  for (const auto& [pa, ca] : a.parts_) {
    for (const auto& [pb, cb] : b.parts_) r.add(Phase{pa.p + pb.p, pa.q + pb.q}, ca * cb);
  }
  return r;
}

bool operator==(const PhasedCoeff& a, const PhasedCoeff& b) {
  if (a.is_exact() && b.is_exact()) return a.parts_ == b.parts_;
  return abs(a.value() - b.value()) <= zero_tolerance();
}

std::string PhasedCoeff::to_string() const {
  if (numeric_) return numeric_->to_string(30);
  if (parts_.empty()) return "0";
  std::string out;
  for (const auto& [ph, c] : parts_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (ph.p != 0 || ph.q != 0) {
      out += "*exp(i*pi*(" + ph.p.get_str() + (ph.q != 0 ? "+" + ph.q.get_str() + "*i" : "") + "))";
    }
  }
  return out;
}

BigComplex ExpSum::eval(const BigComplex& s) const {
  BigComplex acc(BigFloat(0), BigFloat(0));
  const BigFloat pi = BigFloat::pi();
  for (const auto& t : terms) {
    const BigComplex arg = s * (BigFloat(t.frequency) * pi);
    acc += t.coeff.value() * exp(BigComplex(-arg.im, arg.re));
  }
  return acc;
}

bool ExpSum::symmetric() const {
  if (terms.empty()) return false;
  const std::size_t n = terms.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (terms[j].frequency != -terms[n - 1 - j].frequency) return false;
  }
  if (terms.front().coeff.is_exact() && terms.back().coeff.is_exact()) {
    return terms.front().coeff == terms.back().coeff;
  }
  return abs(terms.front().coeff.value() - terms.back().coeff.value()) <= zero_tolerance();
}

bool ExpSum::endpoints_match(const std::optional<BigComplex>& omega_f) const {
  if (!symmetric()) return false;
  if (!omega_f) return true;
  return abs(terms.front().coeff.value() + *omega_f) <= zero_tolerance();
}

bool operator==(const ExpSum& a, const ExpSum& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t j = 0; j < a.terms.size(); ++j) {
    if (a.terms[j].frequency != b.terms[j].frequency) return false;
    if (!(a.terms[j].coeff == b.terms[j].coeff)) return false;
  }
  return true;
}

ExpSum s_expand(const GammaFactor& g) {
  // 2 sin(π(λs+μ)) = -i e^{iπμ} e^{iπλs} + i e^{-iπμ} e^{-iπλs}
  std::map<mpq_class, PhasedCoeff> acc;
  acc[mpq_class(0)] = PhasedCoeff::exact_term(GaussRational(1), GaussRational(0));
  for (const auto& t : g.terms) {
    PhasedCoeff plus, minus;
    if (t.mu.is_exact()) {
      const GaussRational mu = t.mu.exact().gaussian();
      plus = PhasedCoeff::exact_term(GaussRational(0, -1), mu);
      minus = PhasedCoeff::exact_term(GaussRational(0, 1), -mu);
    } else {
      const BigComplex mu = t.mu.to_complex();
      const BigComplex e = exp(BigComplex(-mu.im, mu.re) * BigFloat::pi());
      plus = PhasedCoeff::numeric(BigComplex(BigFloat(0), BigFloat(-1)) * e);
      minus = PhasedCoeff::numeric(BigComplex::i() / e);
    }
    std::map<mpq_class, PhasedCoeff> next;
    for (const auto& [f, c] : acc) {
      next[f + t.lambda] += c * plus;
      next[f - t.lambda] += c * minus;
    }
    acc = std::move(next);
  }

  ExpSum out;
  BigFloat scale(0);
  for (const auto& [f, c] : acc) scale = max(scale, abs(c.value()));
  const BigFloat tiny = scale * ldexp(BigFloat(1), 16 - working_precision());
  for (auto& [f, c] : acc) {
    if (c.is_zero()) continue;
    if (abs(c.value()) <= tiny) {
      // distinct phases can still be Q(i)-linearly dependent (e.g. e^{iπ/6}, e^{iπ/3})
      out.flags.emplace_back("NumericCancellation");
      continue;
    }
    out.terms.push_back({f, std::move(c)});
  }
  return out;
}

BigComplex s_direct(const GammaFactor& g, const BigComplex& s) {
  BigComplex acc(BigFloat(1), BigFloat(0));
  for (const auto& t : g.terms) {
    const BigComplex arg = (s * BigFloat(t.lambda) + t.mu.to_complex()) * BigFloat::pi();
    acc *= sin(arg) * BigFloat(2);
  }
  return acc;
}

RResult r_function(const GammaFactor& f, const GammaFactor& gv, const BigComplex& s) {
  const ExpSum sf = s_expand(f), sg = s_expand(gv);
  const BigComplex den = sg.eval(s);
  if (abs(den) <= coefficient_scale(sg, s) * ldexp(BigFloat(1), 32 - working_precision())) {
    throw DivisionByZero("r_function: S_gamma vanishes at s = " + s.to_string(20));
  }
  RResult r;
  r.value = sf.eval(s) / den;
  r.n_at_most_two = sf.N() <= 2;

  if (sf.terms.size() == sg.terms.size() && !sf.terms.empty()) {
    bool same = true;
    for (std::size_t j = 0; j < sf.terms.size() && same; ++j) {
      same = sf.terms[j].frequency == sg.terms[j].frequency;
    }
    if (same) {
      const BigComplex ratio = sf.terms[0].coeff.value() / sg.terms[0].coeff.value();
      for (std::size_t j = 1; j < sf.terms.size() && same; ++j) {
        const BigComplex d = sf.terms[j].coeff.value() - ratio * sg.terms[j].coeff.value();
        same = abs(d) <= abs(sf.terms[j].coeff.value()) * ldexp(BigFloat(1), 32 - working_precision());
      }
      if (same) {
        r.is_constant = true;
        r.constant = ratio;
      }
    }
  }
  return r;
}

}  // namespace lsharp
