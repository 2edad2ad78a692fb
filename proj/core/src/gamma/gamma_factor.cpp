#include "lsharp/gamma/gamma_factor.hpp"

#include <cctype>

#include "lsharp/error.hpp"

namespace lsharp {

namespace {

void add_factorization(std::map<long, mpq_class>& out, mpz_class n, const mpq_class& weight) {
  if (n < 0) n = -n;
  for (long p = 2; n > 1; ++p) {
    if (mpz_class(p) * p > n) {
      if (!n.fits_slong_p()) throw DomainError("factor_rational: prime factor too large");
      out[n.get_si()] += weight;
      break;
    }
    while (n % p == 0) {
      out[p] += weight;
      n /= p;
    }
    if (p > 10000000) throw DomainError("factor_rational: input too large to factor");
  }
}

void prune(std::map<long, mpq_class>& m) {
  for (auto it = m.begin(); it != m.end();) {
    it = it->second == 0 ? m.erase(it) : std::next(it);
  }
}

}  // namespace

std::map<long, mpq_class> factor_rational(const mpq_class& a) {
  if (a <= 0) throw DomainError("factor_rational: argument must be positive");
  std::map<long, mpq_class> out;
  add_factorization(out, a.get_num(), mpq_class(1));
  add_factorization(out, a.get_den(), mpq_class(-1));
  prune(out);
  return out;
}

std::optional<mpq_class> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  bool slash = false, digit = false;
  for (std::size_t k = i; k < text.size(); ++k) {
    const char c = text[k];
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      digit = true;
    } else if (c == '/' && !slash && digit && k + 1 < text.size()) {
      slash = true;
    } else {
      return std::nullopt;
    }
  }
  if (!digit) return std::nullopt;
  mpq_class q;
  if (q.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0 || q.get_den() == 0) {
    return std::nullopt;
  }
  q.canonicalize();
  return q;
}

QFactor QFactor::from_uv(const mpq_class& u, long v) {
  QFactor q;
  for (auto& [p, e] : factor_rational(u)) q.primes_[p] = e / 2;
  q.pi_exp_ = mpq_class(v, 2);
  q.pi_exp_.canonicalize();
  return q;
}

QFactor QFactor::from_numeric(const BigFloat& value) {
  if (!(value.sign() > 0)) throw InvalidGammaFactor("Q must be positive");
  QFactor q;
  q.numeric_ = value;
  return q;
}

std::optional<std::pair<mpq_class, long>> QFactor::as_uv() const {
  if (!is_exact()) return std::nullopt;
  const mpq_class v2 = pi_exp_ * 2;
  if (v2.get_den() != 1 || !v2.get_num().fits_slong_p()) return std::nullopt;
  mpq_class u = 1;
  for (const auto& [p, e] : primes_) {
    const mpq_class e2 = e * 2;
    if (e2.get_den() != 1 || !e2.get_num().fits_slong_p()) return std::nullopt;
    const long k = e2.get_num().get_si();
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k < 0 ? -k : k));
    if (k < 0) {
      u /= mpq_class(pk);
    } else {
      u *= mpq_class(pk);
    }
  }
  u.canonicalize();
  return std::make_pair(u, v2.get_num().get_si());
}

BigFloat QFactor::log_value() const {
  if (numeric_) return log(*numeric_);
  BigFloat acc(0);
  for (const auto& [p, e] : primes_) acc += BigFloat(e) * log(BigFloat(p));
  if (pi_exp_ != 0) acc += BigFloat(pi_exp_) * log(BigFloat::pi());
  return acc;
}

BigFloat QFactor::value() const {
  if (numeric_) return *numeric_;
  return exp(log_value());
}

QFactor QFactor::times_prime_power(long p, const mpq_class& e) const {
  QFactor q = *this;
  if (q.numeric_) {
    q.numeric_ = *q.numeric_ * exp(BigFloat(e) * log(BigFloat(p)));
    return q;
  }
  for (auto& [pp, ee] : factor_rational(mpq_class(p))) q.primes_[pp] += ee * e;
  prune(q.primes_);
  return q;
}

bool operator==(const QFactor& a, const QFactor& b) {
  if (a.is_exact() != b.is_exact()) return false;
  if (!a.is_exact()) return *a.numeric_ == *b.numeric_;
  return a.primes_ == b.primes_ && a.pi_exp_ == b.pi_exp_;
}

bool GammaFactor::is_exact() const {
  if (!Q.is_exact()) return false;
  for (const auto& t : terms) {
    if (!t.mu.is_exact()) return false;
  }
  return !omega || omega->is_exact();
}

void GammaFactor::validate() const {
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const auto& t = terms[j];
    if (t.lambda <= 0) {
      throw InvalidGammaFactor("lambda_" + std::to_string(j + 1) + " must be positive");
    }
    if (t.mu.is_exact()) {
      if (!t.mu.exact().is_gaussian()) {
        throw InvalidGammaFactor("mu_" + std::to_string(j + 1) + " must be a Gaussian rational");
      }
      if (t.mu.exact().gaussian().re < 0) {
        throw InvalidGammaFactor("Re mu_" + std::to_string(j + 1) + " must be non-negative");
      }
    } else if (t.mu.to_complex().re.sign() < 0) {
      throw InvalidGammaFactor("Re mu_" + std::to_string(j + 1) + " must be non-negative");
    }
  }
  if (omega) {
    if (omega->is_exact()) {
      const auto& w = omega->exact();
      if (!w.is_gaussian() || w.gaussian().norm() != 1) {
        throw InvalidGammaFactor("omega must have modulus 1");
      }
    } else {
      const BigComplex w = omega->to_complex();
      const BigFloat dev = abs(norm(w) - BigFloat(1));
      if (dev > ldexp(BigFloat(4), -w.precision())) {
        throw InvalidGammaFactor("omega must have modulus 1 (deviation " + dev.to_string(4) + ")");
      }
    }
  }
}

}  // namespace lsharp
