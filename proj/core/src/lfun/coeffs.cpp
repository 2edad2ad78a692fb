#include "lsharp/lfun/coeffs.hpp"

#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

#include "lsharp/error.hpp"
#include "lsharp/gamma/transforms.hpp"

namespace lsharp {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

constexpr long kTauLimit = 1000000;
constexpr long kEisensteinLimit = 20000;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 next_prime_after(const mpz_class& x) {
  mpz_class p;
  mpz_nextprime(p.get_mpz_t(), x.get_mpz_t());
  return p.get_ui();
}

// (Π(1-q^n)^3)^8 mod p by g_n = (1/n) Σ_k (9k - n) f_k g_{n-k}
std::vector<u64> eta24_mod(long n_max, u64 p) {
  std::vector<std::pair<long, long>> f;  // sparse η³ via Jacobi's identity
  for (long k = 1;; ++k) {
    const long e = k * (k + 1) / 2;
    if (e >= n_max) break;
    f.emplace_back(e, (k % 2 == 0 ? 1 : -1) * (2 * k + 1));
  }
  std::vector<u64> inv(static_cast<std::size_t>(n_max) + 1, 1);
  for (long i = 2; i <= n_max; ++i) {
    const u64 ii = static_cast<u64>(i);
    inv[ii] = p - mulmod(p / ii, inv[p % ii], p);
  }
  // |(9k-n) f_k| < 2^36 and g < 2^62, so a few thousand products fit in 127 bits
  std::vector<u64> g(static_cast<std::size_t>(n_max), 0);
  g[0] = 1;
  const i128 pm = static_cast<i128>(p);
  for (long n = 1; n < n_max; ++n) {
    i128 acc = 0;
    for (const auto& [k, fk] : f) {
      if (k > n) break;
      acc += static_cast<i128>((9 * k - n) * fk) * static_cast<std::int64_t>(g[static_cast<std::size_t>(n - k)]);
    }
    acc %= pm;
    if (acc < 0) acc += pm;
    g[static_cast<std::size_t>(n)] = mulmod(static_cast<u64>(acc), inv[static_cast<std::size_t>(n)], p);
  }
  return g;
}

std::vector<mpq_class> series_mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b, std::size_t n) {
  std::vector<mpq_class> r(n, 0);
  for (std::size_t i = 0; i < n && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// E_k = 1 + c Σ σ_{k-1}(n) q^n, coefficients q^0..q^{n-1}
std::vector<mpq_class> eisenstein(long k, std::size_t n) {
  std::vector<mpq_class> e(n, 0);
  e[0] = 1;
  const long c = k == 4 ? 240 : -504;
  const auto sig = sigma_table(k - 1, static_cast<long>(n));
  for (std::size_t i = 1; i < n; ++i) e[i] = c * sig[i - 1];
  return e;
}

BigComplex pow_n(long n, const mpq_class& real_shift, const BigFloat& theta) {
  const BigFloat ln = log(BigFloat(n));
  BigComplex r = expi(theta * ln);
  if (real_shift != 0) r *= exp(-BigFloat(real_shift) * ln);
  return r;
}

}  // namespace

std::vector<mpz_class> sigma_table(long k, long n_max) {
  std::vector<mpz_class> s(static_cast<std::size_t>(std::max(n_max, 0L)), 0);
  for (long d = 1; d <= n_max; ++d) {
    mpz_class dk;
    mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
    for (long m = d; m <= n_max; m += d) s[static_cast<std::size_t>(m - 1)] += dk;
  }
  return s;
}

void divisor_counts(u64 lo, u64 hi, std::vector<std::uint32_t>& out) {
  if (lo == 0) throw DomainError("divisor_counts: n starts at 1");
  out.assign(hi > lo ? hi - lo : 0, 0);
  if (hi <= lo) return;
  const u64 top = hi - 1;
  for (u64 d = 1; d * d <= top; ++d) {
    const u64 sq = d * d;
    u64 m = std::max(sq, (lo + d - 1) / d * d);
    for (; m < hi; m += d) out[m - lo] += m == sq ? 1 : 2;
  }
}

std::vector<mpz_class> ramanujan_tau(long n_max) {
  if (n_max < 1) return {};
  if (n_max > kTauLimit) throw BudgetExceeded("ramanujan_tau: n_max above " + std::to_string(kTauLimit));
  const u64 p1 = next_prime_after(mpz_class(1) << 62);
  const u64 p2 = next_prime_after(mpz_class(p1));
  const auto g1 = eta24_mod(n_max, p1);
  const auto g2 = eta24_mod(n_max, p2);
  const mpz_class P1(p1), P2(p2), M = P1 * P2, half = M / 2;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), P1.get_mpz_t(), P2.get_mpz_t());
  std::vector<mpz_class> tau(static_cast<std::size_t>(n_max));
  for (long n = 1; n <= n_max; ++n) {
    const mpz_class r1(g1[static_cast<std::size_t>(n - 1)]), r2(g2[static_cast<std::size_t>(n - 1)]);
    mpz_class t = (r2 - r1) * inv % P2;
    if (t < 0) t += P2;
    mpz_class x = r1 + P1 * t;
    if (x > half) x -= M;
    tau[static_cast<std::size_t>(n - 1)] = x;
  }
  return tau;
}

CoefficientSource CoefficientSource::divisor_d2() {
  CoefficientSource s;
  s.kind_ = SourceKind::DivisorD2;
  s.weight_ = 1;
  return s;
}

CoefficientSource CoefficientSource::eta_power24() {
  CoefficientSource s;
  s.kind_ = SourceKind::EtaPower24;
  s.weight_ = 12;
  s.limit_ = kTauLimit;
  s.norm_.real_shift = mpq_class(11, 2);
  return s;
}

CoefficientSource CoefficientSource::eisenstein_product(long k) {
  if (k != 12 && k != 16 && k != 18 && k != 20 && k != 22 && k != 26) {
    throw DomainError("eisenstein_product: weight " + std::to_string(k) + " has no single Delta*E_{k-12} eigenform");
  }
  CoefficientSource s;
  s.kind_ = k == 12 ? SourceKind::EtaPower24 : SourceKind::EisensteinProduct;
  s.weight_ = k;
  s.limit_ = k == 12 ? kTauLimit : kEisensteinLimit;
  s.norm_.real_shift = mpq_class(k - 1, 2);
  return s;
}

CoefficientSource CoefficientSource::file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open coefficient file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

CoefficientSource CoefficientSource::parse(const std::string& text, const std::string& origin) {
  static const std::regex header(R"(# lfun-coeffs v1; normalization=(a1|none); shift=([-+]?[0-9]+(\.[0-9]+)?([eE][-+]?[0-9]+)?))");
  static const std::regex number(R"([-+]?[0-9]+(\.[0-9]+)?([eE][-+]?[0-9]+)?)");
  CoefficientSource s;
  s.kind_ = SourceKind::FileIngested;
  s.origin_ = origin;

  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError("empty coefficient file", 1, 1);
  ++lineno;
  std::smatch m;
  if (!std::regex_match(line, m, header)) throw ParseError("bad header in " + origin, 1, 1);
  s.norm_.first_nonzero_to_one = m[1] == "a1";
  s.norm_.theta = BigFloat(std::string_view(m[2].str()));

  std::vector<BigComplex> values;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::pair<std::string, std::size_t>> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
      if (line[pos] == ' ') {
        ++pos;
        continue;
      }
      const std::size_t start = pos;
      while (pos < line.size() && line[pos] != ' ') ++pos;
      fields.emplace_back(line.substr(start, pos - start), start + 1);
    }
    if (fields.empty() && in.peek() == std::char_traits<char>::eof()) break;
    if (fields.size() < 2 || fields.size() > 3) throw ParseError("expected 'n re [im]'", lineno, 1);
    const long expect = static_cast<long>(values.size()) + 1;
    if (fields[0].first != std::to_string(expect)) {
      throw ParseError("expected index " + std::to_string(expect), lineno, fields[0].second);
    }
    for (std::size_t f = 1; f < fields.size(); ++f) {
      if (!std::regex_match(fields[f].first, number)) throw ParseError("bad decimal", lineno, fields[f].second);
    }
    BigComplex v(BigFloat(std::string_view(fields[1].first)),
                 fields.size() == 3 ? BigFloat(std::string_view(fields[2].first)) : BigFloat(0));
    values.push_back(v);
  }
  if (values.empty()) throw ParseError("no coefficients in " + origin, lineno, 1);

  if (s.norm_.first_nonzero_to_one) {
    auto it = std::find_if(values.begin(), values.end(), [](const BigComplex& v) { return !v.is_zero(); });
    if (it == values.end()) throw DomainError("all coefficients vanish in " + origin);
    const BigComplex lead = *it;
    for (auto& v : values) v = v / lead;
  }
  if (!s.norm_.theta.is_zero()) {
    for (std::size_t n = 2; n <= values.size(); ++n) values[n - 1] *= pow_n(static_cast<long>(n), 0, s.norm_.theta);
  }
  s.limit_ = static_cast<long>(values.size());
  s.file_values_ = std::make_shared<const std::vector<BigComplex>>(std::move(values));
  return s;
}

std::string CoefficientSource::name() const {
  switch (kind_) {
    case SourceKind::DivisorD2:
      return "DivisorD2";
    case SourceKind::EtaPower24:
      return "EtaPower24";
    case SourceKind::EisensteinProduct:
      return "EisensteinProduct{" + std::to_string(weight_) + "}";
    case SourceKind::FileIngested:
      return "FileIngested{" + origin_ + "}";
  }
  return "?";
}

void CoefficientSource::require(long n_max) const {
  if (n_max < 0) throw DomainError("negative coefficient count");
  if (limit_ > 0 && n_max > limit_) {
    throw BudgetExceeded(name() + ": at most " + std::to_string(limit_) + " coefficients available");
  }
}

std::vector<mpq_class> CoefficientSource::exact(long n_max) const {
  require(n_max);
  std::vector<mpq_class> out(static_cast<std::size_t>(n_max));
  if (n_max == 0) return out;
  switch (kind_) {
    case SourceKind::DivisorD2: {
      std::vector<std::uint32_t> d;
      divisor_counts(1, static_cast<u64>(n_max) + 1, d);
      for (long n = 0; n < n_max; ++n) out[static_cast<std::size_t>(n)] = d[static_cast<std::size_t>(n)];
      return out;
    }
    case SourceKind::EtaPower24: {
      const auto t = ramanujan_tau(n_max);
      for (long n = 0; n < n_max; ++n) out[static_cast<std::size_t>(n)] = t[static_cast<std::size_t>(n)];
      return out;
    }
    case SourceKind::EisensteinProduct: {
      const std::size_t n = static_cast<std::size_t>(n_max);
      const auto t = ramanujan_tau(n_max);
      std::vector<mpq_class> delta(n + 1, 0);  // q-expansion, delta[0] = 0
      for (std::size_t i = 1; i <= n; ++i) delta[i] = t[i - 1];
      std::vector<mpq_class> e;
      switch (weight_ - 12) {
        case 4: e = eisenstein(4, n + 1); break;
        case 6: e = eisenstein(6, n + 1); break;
        case 8: e = series_mul(eisenstein(4, n + 1), eisenstein(4, n + 1), n + 1); break;
        case 10: e = series_mul(eisenstein(4, n + 1), eisenstein(6, n + 1), n + 1); break;
        case 14:
          e = series_mul(series_mul(eisenstein(4, n + 1), eisenstein(4, n + 1), n + 1), eisenstein(6, n + 1), n + 1);
          break;
        default: throw DomainError("eisenstein_product: unsupported weight");
      }
      const auto f = series_mul(delta, e, n + 1);
      for (std::size_t i = 0; i < n; ++i) out[i] = f[i + 1];
      break;
    }
    case SourceKind::FileIngested:
      throw DomainError(name() + ": file coefficients are not exact");
  }
  // Hecke normalization (a(1) is already 1 for these products, kept for safety)
  auto it = std::find_if(out.begin(), out.end(), [](const mpq_class& v) { return v != 0; });
  if (it != out.end() && *it != 1) {
    const mpq_class lead = *it;
    for (auto& v : out) v /= lead;
  }
  return out;
}

std::vector<BigComplex> CoefficientSource::coeffs(long n_max) const {
  require(n_max);
  if (kind_ == SourceKind::FileIngested) {
    return {file_values_->begin(), file_values_->begin() + n_max};
  }
  const auto ex = exact(n_max);
  std::vector<BigComplex> out(static_cast<std::size_t>(n_max));
  for (long n = 1; n <= n_max; ++n) {
    BigComplex v(BigFloat(ex[static_cast<std::size_t>(n - 1)]));
    if (n > 1 && (norm_.real_shift != 0 || !norm_.theta.is_zero())) v *= pow_n(n, norm_.real_shift, norm_.theta);
    out[static_cast<std::size_t>(n - 1)] = v;
  }
  return out;
}

std::vector<std::complex<double>> CoefficientSource::coeffs_double(long n_max) const {
  require(n_max);
  std::vector<std::complex<double>> out(static_cast<std::size_t>(n_max));
  if (kind_ == SourceKind::DivisorD2) {
    std::vector<std::uint32_t> d;
    divisor_counts(1, static_cast<u64>(n_max) + 1, d);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<double>(d[i]);
    return out;
  }
  if (kind_ != SourceKind::FileIngested && norm_.theta.is_zero()) {
    // exact integers, then the weight shift in double
    const auto ex = exact(n_max);
    const double shift = norm_.real_shift.get_d();
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = ex[i].get_d() * std::pow(static_cast<double>(i + 1), -shift);
    }
    return out;
  }
  const auto c = coeffs(n_max);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = {c[i].re.to_double(), c[i].im.to_double()};
  return out;
}

bool CoefficientSource::nonzero(long m) const {
  if (m < 1) return false;
  if (kind_ == SourceKind::DivisorD2) return true;
  if (kind_ == SourceKind::FileIngested) {
    if (m > limit_) throw BudgetExceeded(name() + ": coefficient " + std::to_string(m) + " not available");
    return !(*file_values_)[static_cast<std::size_t>(m - 1)].is_zero();
  }
  return exact(m).back() != 0;
}

std::optional<GammaFactor> CoefficientSource::gamma() const {
  if (kind_ == SourceKind::FileIngested) return std::nullopt;
  if (kind_ == SourceKind::DivisorD2) {
    GammaFactor g;
    g.Q = QFactor::from_uv(mpq_class(1), -2);
    g.terms = {{mpq_class(1, 2), Scalar(0L)}, {mpq_class(1, 2), Scalar(0L)}};
    g.omega = Scalar(1L);
    return g;
  }
  GammaFactor g = virtual_gamma(HeckeKind{Scalar(mpq_class(weight_ - 1, 2))});
  g.omega = Scalar(weight_ % 4 == 0 ? 1L : -1L);  // i^k
  return g;
}

}  // namespace lsharp
