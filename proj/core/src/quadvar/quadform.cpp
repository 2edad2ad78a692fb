#include "lsharp/quadvar/quadform.hpp"

#include <sstream>

#include "lsharp/error.hpp"
#include "lsharp/gamma/transforms.hpp"
#include "lsharp/hfun/structural.hpp"
#include "lsharp/quadvar/wpoly.hpp"

namespace lsharp {

namespace {

void prune(BilinearForm& f) {
  for (auto it = f.begin(); it != f.end();) {
    it = it->second.is_zero() ? f.erase(it) : std::next(it);
  }
}

void trim(std::vector<ExactScalar>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

Scalar eval_bilinear(const BilinearForm& f, const std::vector<Scalar>& d) {
  Scalar acc;
  for (const auto& [lh, c] : f) {
    const auto [l, h] = lh;
    if (l >= static_cast<long>(d.size()) || h >= static_cast<long>(d.size())) {
      throw DomainError("eval_bilinear: not enough structural invariants");
    }
    acc = acc + Scalar(c) * d[static_cast<std::size_t>(l)] * d[static_cast<std::size_t>(h)];
  }
  return acc;
}

bool ResidueIdentity::is_zero() const {
  for (const auto& [deg, f] : coeffs) {
    if (!f.empty()) return false;
  }
  return true;
}

std::map<long, Scalar> ResidueIdentity::eval(const std::vector<Scalar>& d) const {
  std::map<long, Scalar> out;
  for (const auto& [deg, f] : coeffs) out[deg] = eval_bilinear(f, d);
  return out;
}

ResidueIdentity residue_identity(long M) {
  if (M < 1) throw DomainError("residue_identity: M must be positive");
  ResidueIdentity r;
  r.M = M;
  const mpq_class s = pole_point(M);
  for (long m = 1; m <= M; ++m) {
    // (-2πi)^m
    mpq_class two_m = 1;
    for (long j = 0; j < m; ++j) two_m *= -2;
    const ExactScalar factor = ExactScalar::pi_power(2 * m, GaussRational(two_m) * i_power(m));
    for (const auto& [key, c] : w_poly(m)->at(s)) {
      const auto [alpha_deg, ell] = key;
      r.coeffs[alpha_deg + m][{ell, M - m}] += c * factor;
    }
  }
  for (auto it = r.coeffs.begin(); it != r.coeffs.end();) {
    prune(it->second);
    it = it->second.empty() ? r.coeffs.erase(it) : std::next(it);
  }
  return r;
}

QuadraticForm quad_form_raw(long N) {
  if (N < 1) throw DomainError("quad_form: N must be positive");
  const ResidueIdentity ri = residue_identity(2 * N);
  QuadraticForm q;
  q.N = N;
  if (auto it = ri.coeffs.find(2 * N); it != ri.coeffs.end()) q.alpha = it->second;
  for (const auto& [lh, c] : q.alpha) {
    if (lh.first + lh.second > N) {
      throw StructuralViolation("quad_form(" + std::to_string(N) + "): term D" + std::to_string(lh.first) + "*D" +
                                std::to_string(lh.second) + " exceeds total index N");
    }
  }
  auto get = [&](long l, long h) {
    auto it = q.alpha.find({l, h});
    return it == q.alpha.end() ? ExactScalar() : it->second;
  };
  q.scale = N == 0 ? get(0, 0) : get(0, N) + get(N, 0);
  return q;
}

QuadraticForm quad_form(long N) {
  if (N < 2) throw DomainError("quad_form: the normalized form needs N >= 2");
  QuadraticForm q = quad_form_raw(N);
  if (q.scale.is_zero()) {
    throw NormalizationFailure("quad_form(" + std::to_string(N) + "): D0*DN coefficient vanishes");
  }
  if (!q.scale.is_monomial()) {
    throw StructuralViolation("quad_form(" + std::to_string(N) + "): normalizer mixes pi grades: " +
                              q.scale.to_string());
  }
  const ExactScalar inv = q.scale.inverse();
  for (auto& [lh, c] : q.alpha) {
    c = c * inv;
    if (!c.is_gaussian()) {
      throw StructuralViolation("quad_form(" + std::to_string(N) + "): coefficient " + c.to_string() +
                                " is not of grade zero");
    }
    if (!c.is_real()) {
      throw StructuralViolation("quad_form(" + std::to_string(N) + "): coefficient " + c.to_string() +
                                " is not real");
    }
  }
  q.normalized = true;
  return q;
}

std::string QuadraticForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [lh, c] : alpha) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*X" << lh.first << "*X" << lh.second;
  }
  return first ? "0" : os.str();
}

long ExactPoly::degree() const { return static_cast<long>(c.size()) - 1; }

ExactScalar ExactPoly::eval(const ExactScalar& x) const {
  ExactScalar acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
  ExactPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  trim(r.c);
  return r;
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
  ExactPoly r;
  if (a.c.empty() || b.c.empty()) return r;
  r.c.resize(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  trim(r.c);
  return r;
}

ExactPoly operator*(const ExactScalar& s, const ExactPoly& a) {
  ExactPoly r = a;
  for (auto& v : r.c) v = s * v;
  trim(r.c);
  return r;
}

bool operator==(const ExactPoly& a, const ExactPoly& b) {
  ExactPoly x = a, y = b;
  trim(x.c);
  trim(y.c);
  return x.c == y.c;
}

std::string ExactPoly::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c[i].to_string() << ")";
    if (i > 0) os << "*" << var << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return first ? "0" : os.str();
}

RecursionE recursion(long Lmax) {
  if (Lmax < 2) throw DomainError("recursion: Lmax must be at least 2");
  RecursionE r;
  r.E.push_back(ExactPoly{{ExactScalar(1L)}});
  r.E.push_back(ExactPoly{{ExactScalar(), ExactScalar(1L)}});
  for (long N = 2; N <= Lmax; ++N) {
    const QuadraticForm q = quad_form(N);
    // the D_N terms are exactly α_{0,N} D_0 D_N + α_{N,0} D_N D_0 = D_N
    ExactPoly rest;
    for (const auto& [lh, c] : q.alpha) {
      if (lh.first == N || lh.second == N) continue;
      rest = rest + c * (r.E[static_cast<std::size_t>(lh.first)] * r.E[static_cast<std::size_t>(lh.second)]);
    }
    r.E.push_back(ExactScalar(-1L) * rest);
  }
  return r;
}

mpq_class ExtractedPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string ExtractedPoly::to_string() const {
  const std::string var = kind == PolyKind::Hecke ? "mu" : "kappa";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] == 0) continue;
    mpq_class v = coeffs[i];
    if (!first) {
      os << (v < 0 ? " - " : " + ");
      v = abs(v);
    }
    first = false;
    if (i == 0) {
      os << v.get_str();
    } else {
      if (v != 1) os << v.get_str() << "*";
      os << var << (i > 1 ? "^" + std::to_string(i) : "");
    }
  }
  return first ? "0" : os.str();
}

namespace {

mpq_class sample(PolyKind kind, int epsilon, const mpq_class& x, long ell) {
  const GammaFactor g = kind == PolyKind::Hecke ? virtual_gamma(HeckeKind{Scalar(x)})
                                                : virtual_gamma(MaassKind{epsilon, Scalar(x)});
  const Scalar d = structural_symbolic(g, ell).d[static_cast<std::size_t>(ell)];
  if (!d.is_exact() || !d.exact().is_rational()) {
    throw InterpolationMismatch("poly_extract: d[" + std::to_string(ell) + "] is not rational at " + x.get_str());
  }
  return d.exact().rational();
}

// Newton divided differences, returned in ascending powers
std::vector<mpq_class> interpolate(const std::vector<mpq_class>& x, const std::vector<mpq_class>& y) {
  const std::size_t n = x.size();
  std::vector<mpq_class> dd = y;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (x[i] - x[i - j]);
  }
  std::vector<mpq_class> c(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    // c ← c·(X - x_k) + dd_k
    for (std::size_t i = n - 1; i > 0; --i) c[i] = c[i - 1] - x[k] * c[i];
    c[0] = -x[k] * c[0] + dd[k];
  }
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

}  // namespace

ExtractedPoly poly_extract(PolyKind kind, long ell) {
  if (ell < 0) throw DomainError("poly_extract: negative order");
  const long n = 2 * ell + 3;
  std::vector<mpq_class> xs;
  for (long j = 1; j <= n + 3; ++j) xs.emplace_back(mpq_class(j, 2) + (kind == PolyKind::Hecke ? mpq_class(0) : mpq_class(1, 5)));
  for (auto& x : xs) x.canonicalize();

  ExtractedPoly out;
  out.kind = kind;
  out.ell = ell;
  const int eps_count = kind == PolyKind::Hecke ? 1 : 2;
  for (int eps = 0; eps < eps_count; ++eps) {
    std::vector<mpq_class> fit_x(xs.begin(), xs.begin() + n), fit_y;
    for (const auto& x : fit_x) fit_y.push_back(sample(kind, eps, x, ell));
    ExtractedPoly p{kind, ell, interpolate(fit_x, fit_y)};
    for (long j = n; j < n + 3; ++j) {
      const mpq_class& x = xs[static_cast<std::size_t>(j)];
      if (p.eval(x) != sample(kind, eps, x, ell)) {
        throw InterpolationMismatch("poly_extract: d[" + std::to_string(ell) + "] is not a polynomial of degree " +
                                    std::to_string(n - 1) + " (check point " + x.get_str() + ")");
      }
    }
    if (eps == 0) {
      out.coeffs = p.coeffs;
    } else if (p.coeffs != out.coeffs) {
      throw InterpolationMismatch("poly_extract: Q_" + std::to_string(ell) + " depends on epsilon");
    }
  }
  return out;
}

}  // namespace lsharp
