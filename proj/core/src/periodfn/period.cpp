#include "lsharp/periodfn/period.hpp"

#include <cmath>

#include "lsharp/error.hpp"
#include "lsharp/numkern/quadrature.hpp"
#include "lsharp/numkern/special.hpp"

namespace lsharp {

namespace {

double log_tolerance() {
  // ln 10^{-P/3}
  return -static_cast<double>(working_precision()) / 3.0 * std::log(10.0);
}

BigFloat from_mpq(const mpq_class& q) { return BigFloat(q); }

// a(n) n^λ for n = 1..N; exact integers when λ undoes the source's weight shift
std::vector<BigComplex> series_coeffs(const FourierSeries& fs, std::size_t N) {
  const long n = static_cast<long>(N);
  const CoefficientSource& src = fs.source;
  std::vector<BigComplex> b(N);
  const bool generated = src.kind() != SourceKind::FileIngested;
  if (generated && fs.lambda.im.is_zero() && fs.lambda.re == BigFloat(src.normalization().real_shift)) {
    const auto ex = src.exact(n);
    for (std::size_t i = 0; i < N; ++i) b[i] = BigComplex(from_mpq(ex[i]));
    return b;
  }
  const auto a = src.coeffs(n);
  for (std::size_t i = 0; i < N; ++i) b[i] = a[i] * pow(BigFloat(static_cast<long>(i + 1)), fs.lambda);
  return b;
}

}  // namespace

FourierSeries FourierSeries::with_lambda(const CoefficientSource& src, const BigComplex& lambda) {
  FourierSeries fs{src, lambda};
  fs.bound_beta = lambda.re.to_double() + 0.5;
  if (src.kind() == SourceKind::FileIngested) {
    // a file declares nothing, so take the largest coefficient it holds
    double amax = 0;
    for (const auto& v : src.coeffs_double(src.limit())) amax = std::max(amax, std::abs(v));
    fs.bound_c = std::max(2.0, 2.0 * amax);
  }
  return fs;
}

FourierSeries FourierSeries::holomorphic(const CoefficientSource& src) {
  if (src.kind() == SourceKind::FileIngested) {
    throw DomainError("FourierSeries: a file source needs an explicit lambda");
  }
  const long k = src.kind() == SourceKind::DivisorD2 ? 1 : src.weight();
  return with_lambda(src, BigComplex(BigFloat(mpq_class(k - 1, 2))));
}

FourierSeries FourierSeries::maass(const CoefficientSource& src, const BigFloat& kappa) {
  return with_lambda(src, BigComplex(BigFloat(0), kappa));
}

std::size_t FourierSeries::cutoff(const BigFloat& y) const {
  const double yd = y.to_double();
  if (!(yd > 0)) throw DomainError("FourierSeries: Im z must be positive");
  const double lt = log_tolerance();
  const double lc = std::log(bound_c);
  const double decay = 2 * M_PI * yd;
  for (std::size_t N = 0;; ++N) {
    const double m = static_cast<double>(N + 1);
    // geometric majorant of the tail from n = N + 1 on
    const double ratio_log = bound_beta * std::log1p(1.0 / m) - decay;
    if (ratio_log >= 0) continue;
    const double tail = lc + bound_beta * std::log(m) - decay * m - std::log(-std::expm1(ratio_log));
    if (tail < lt) return N;
    if (N > 100000000) throw BudgetExceeded("FourierSeries: cutoff beyond 1e8 terms");
  }
}

BigComplex f_eval(const FourierSeries& fs, const BigComplex& z) {
  if (z.im < BigFloat(1e-3)) {
    throw SlowConvergence("f_eval: Im z = " + z.im.to_string(6) + " is below 1e-3");
  }
  const std::size_t N = fs.cutoff(z.im);
  if (fs.source.limit() != 0 && N > static_cast<std::size_t>(fs.source.limit())) {
    throw BudgetExceeded("f_eval: needs " + std::to_string(N) + " coefficients of " + fs.source.name());
  }
  PrecisionScope ps(bits_for_tolerance(working_precision(), 3));
  const auto b = series_coeffs(fs, N);
  const BigComplex q = exp(BigComplex(BigFloat(0), ldexp(BigFloat::pi(), 1)) * z);
  BigComplex acc(0), qn(1);
  for (std::size_t n = 0; n < N; ++n) {
    qn *= q;
    acc += b[n] * qn;
  }
  return acc;
}

BigComplex psi_eval(const FourierSeries& fs, const BigComplex& z) {
  PrecisionScope ps(bits_for_tolerance(working_precision(), 3));
  const BigComplex e = -(BigComplex(2) * fs.lambda + BigComplex(1));
  // principal log is continuous on the upper half-plane
  return f_eval(fs, z) - pow(z, e) * f_eval(fs, BigComplex(-1) / z);
}

BigComplex three_term_residual(const FourierSeries& fs, const BigComplex& z) {
  PrecisionScope ps(bits_for_tolerance(working_precision(), 3));
  const BigComplex z1 = z + BigComplex(1);
  const BigComplex e = -(BigComplex(2) * fs.lambda + BigComplex(1));
  return psi_eval(fs, z) - psi_eval(fs, z1) - pow(z1, e) * psi_eval(fs, z / z1);
}

BigComplex mittag_leffler(const BigFloat& mu, const BigComplex& w) {
  const long P = working_precision();
  const double aw = abs(w).to_double();
  // the alternating sum cancels about |w|/ln 2 bits
  const long bits = P + static_cast<long>(std::ceil(aw / std::log(2.0))) + 32;
  PrecisionScope ps(bits);
  const BigFloat half(0.5);
  const BigFloat tol = ldexp(BigFloat(1), -bits);
  const long min_terms = static_cast<long>(std::ceil(std::exp(1.0) * aw)) + 10 * P / 3;
  BigComplex acc(0), pw(1);
  const BigComplex mw = -w;
  for (long l = 0;; ++l) {
    const BigComplex term = pw * rgamma(BigComplex(BigFloat(l) + half - mu));
    acc += term;
    if (l >= min_terms && abs(term) <= tol * max(abs(acc), BigFloat(1))) break;
    if (l > 1000000) throw NonConvergence("mittag_leffler: no convergence");
    pw *= mw;
  }
  return acc;
}

BigComplex j_contour(const BigFloat& mu, const BigComplex& w, const BigFloat& delta) {
  if (w.re.sign() <= 0) throw DomainError("j_contour: Re w must be positive");
  const double margin = M_PI / 2 - std::abs(arg(w).to_double());
  if (margin < 0.1) {
    throw NonConvergence("j_contour: arg w too close to the imaginary axis");
  }
  if (!(delta > BigFloat(0)) || !(delta < BigFloat(0.5))) {
    throw DomainError("j_contour: delta must lie in (0, 1/2) to keep the line between poles");
  }
  PrecisionScope ps(std::max<long>(128, working_precision() / 2));
  const BigFloat sigma = BigFloat(1) + delta;
  const BigComplex lw = log(w);
  const BigComplex pi_c(BigFloat::pi());
  auto integrand = [&](const BigComplex& s) {
    return exp(-s * lw) * rgamma(BigComplex(1) - s - BigComplex(mu)) / cos(pi_c * s);
  };
  // integrand decays like e^{-margin·|t|}·poly(t); walk out until the tail is negligible
  const BigFloat tail_tol(1e-24);
  double T = 8;
  for (;; T += 4) {
    const double hi = abs(integrand(BigComplex(sigma, BigFloat(T)))).to_double();
    const double lo = abs(integrand(BigComplex(sigma, BigFloat(-T)))).to_double();
    if (std::max(hi, lo) / margin < 1e-24) break;
    if (T > 4000) throw NonConvergence("j_contour: integrand does not decay");
  }
  // split at 0 and in pieces of 8 so the adaptive rule sees smooth stretches
  BigComplex total(0);
  for (double a = -T; a < T; a += 8) {
    const double b = std::min(T, a + 8);
    total += line_integral(integrand, sigma, BigFloat(a), BigFloat(b), tail_tol).value;
  }
  // (1/2πi) ∫ f ds
  return total / BigComplex(BigFloat(0), ldexp(BigFloat::pi(), 1));
}

}  // namespace lsharp
