#include "lsharp/lfun/twist.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <Eigen/Dense>

#include "ddouble.hpp"
#include "lsharp/error.hpp"
#include "lsharp/hfun/structural.hpp"

namespace lsharp {

namespace {

using dd::CDD;
using dd::DD;

DD to_dd(const BigFloat& x) {
  const double hi = x.to_double();
  const double lo = (x - BigFloat(hi)).to_double();
  return dd::quick_two_sum(hi, lo);
}

constexpr int kTable = 1024;

// cos/sin(2πj/kTable) and 2π in double-double
struct PhaseTables {
  std::vector<DD> c, s;
  DD two_pi, sixth, inv120, inv24;

  PhaseTables() : c(kTable + 1), s(kTable + 1) {
    PrecisionScope ps(192);
    const BigFloat tp = ldexp(BigFloat::pi(), 1);
    two_pi = to_dd(tp);
    for (int j = 0; j <= kTable; ++j) {
      const BigFloat a = tp * BigFloat(j) / BigFloat(kTable);
      c[static_cast<std::size_t>(j)] = to_dd(cos(a));
      s[static_cast<std::size_t>(j)] = to_dd(sin(a));
    }
    sixth = to_dd(BigFloat(1) / BigFloat(6));
    inv120 = to_dd(BigFloat(1) / BigFloat(120));
    inv24 = to_dd(BigFloat(1) / BigFloat(24));
  }
};

const PhaseTables& tables() {
  static const PhaseTables t;
  return t;
}

// e^{-2πiθ} for θ given in double-double
CDD unit_phase(DD theta, const PhaseTables& t) {
  DD f = dd::sub(theta, dd::floor(theta));
  const double jd = std::nearbyint(f.hi * kTable);
  const auto j = static_cast<std::size_t>(jd);
  f = dd::add(f, {-jd / kTable, 0.0});
  const DD phi = dd::mul(f, t.two_pi);
  const DD x = dd::mul(phi, phi);
  // |φ| ≤ π/kTable, so x³ and beyond fit in a plain double
  const double xd = x.hi;
  const double tc = -1.0 / 720 + xd * (1.0 / 40320 - xd / 3628800);
  const double ts = -1.0 / 5040 + xd * (1.0 / 362880 - xd / 39916800);
  DD cs = dd::add(t.inv24, {xd * tc, 0.0});
  cs = dd::add({-0.5, 0.0}, dd::mul(x, cs));
  cs = dd::add({1.0, 0.0}, dd::mul(x, cs));
  DD sn = dd::add(t.inv120, {xd * ts, 0.0});
  sn = dd::sub(dd::mul(x, sn), t.sixth);
  sn = dd::add({1.0, 0.0}, dd::mul(x, sn));
  sn = dd::mul(sn, phi);
  // angle 2πj/kTable + φ, conjugated
  const DD c = dd::sub(dd::mul(t.c[j], cs), dd::mul(t.s[j], sn));
  const DD s = dd::add(dd::mul(t.s[j], cs), dd::mul(t.c[j], sn));
  return {c, dd::neg(s)};
}

unsigned resolve_threads(unsigned t) {
  if (t != 0) return t;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

SpectrumResult spectrum_member(const CoefficientSource& src, const BigFloat& alpha, const BigFloat& tol) {
  SpectrumResult r;
  if (alpha.sign() <= 0) return r;
  const BigFloat quarter_sq = alpha * alpha / BigFloat(4);
  const BigFloat m = round(quarter_sq);
  if (m < BigFloat(1) || abs(quarter_sq - m) > tol) return r;
  r.m = m.to_long();
  r.member = src.nonzero(r.m);
  return r;
}

std::uint64_t twist_cutoff(double X) {
  if (!(X > 0) || !std::isfinite(X)) throw DomainError("smoothed_twist: X must be positive");
  const double n = std::ceil(X * std::log(10.0) * static_cast<double>(kTwistPrecisionBits) / 3.0);
  if (n >= 1.8e19) throw BudgetExceeded("smoothed_twist: cutoff overflows");
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(n));
}

std::vector<std::complex<double>> smoothed_twist_grid(const CoefficientSource& src, const BigFloat& alpha,
                                                      const std::vector<double>& xs, const TwistOptions& opt) {
  if (alpha.sign() <= 0) throw DomainError("smoothed_twist: alpha must be positive");
  if (xs.empty()) return {};
  const std::size_t nx = xs.size();
  std::vector<std::uint64_t> cut(nx);
  for (std::size_t i = 0; i < nx; ++i) cut[i] = twist_cutoff(xs[i]);
  const std::uint64_t n_max = *std::max_element(cut.begin(), cut.end());
  if (n_max > opt.max_terms) {
    throw BudgetExceeded("smoothed_twist: " + std::to_string(n_max) + " terms exceed the budget of " +
                         std::to_string(opt.max_terms));
  }
  if (src.limit() != 0 && n_max > static_cast<std::uint64_t>(src.limit())) {
    throw BudgetExceeded("smoothed_twist: " + src.name() + " supplies only " + std::to_string(src.limit()) +
                         " coefficients, need " + std::to_string(n_max));
  }

  const bool sieve = src.kind() == SourceKind::DivisorD2;
  std::vector<std::complex<double>> stored;
  if (!sieve) stored = src.coeffs_double(static_cast<long>(n_max));

  const PhaseTables& tab = tables();
  const DD a = to_dd(alpha);
  std::vector<DD> step(nx);
  for (std::size_t i = 0; i < nx; ++i) {
    PrecisionScope ps(160);
    step[i] = to_dd(exp(BigFloat(-1) / BigFloat(xs[i])));
  }

  const std::size_t block = std::max<std::size_t>(opt.block, 1);
  const std::size_t nblocks = static_cast<std::size_t>((n_max + block - 1) / block);
  std::vector<std::vector<CDD>> partial(nblocks);

  auto run_block = [&](std::size_t b, std::vector<std::uint32_t>& dbuf) {
    const std::uint64_t lo = 1 + static_cast<std::uint64_t>(b) * block;
    const std::uint64_t hi = std::min<std::uint64_t>(lo + block, n_max + 1);
    if (sieve) divisor_counts(lo, hi, dbuf);
    std::vector<CDD> acc(nx);
    std::vector<DD> w(nx);
    std::vector<char> active(nx, 0);
    for (std::size_t i = 0; i < nx; ++i) {
      if (cut[i] < lo) continue;
      active[i] = 1;
      PrecisionScope ps(160);
      w[i] = to_dd(exp(-BigFloat(static_cast<double>(lo)) / BigFloat(xs[i])));
    }
    for (std::uint64_t n = lo; n < hi; ++n) {
      std::complex<double> an = sieve ? std::complex<double>(dbuf[n - lo]) : stored[n - 1];
      const CDD ph = unit_phase(dd::mul(a, dd::sqrt(static_cast<double>(n))), tab);
      CDD term;
      if (an.imag() == 0.0) {
        term = {dd::mul(ph.re, an.real()), dd::mul(ph.im, an.real())};
      } else {
        term = dd::cmul(ph, {{an.real(), 0.0}, {an.imag(), 0.0}});
      }
      for (std::size_t i = 0; i < nx; ++i) {
        if (!active[i]) continue;
        if (n > cut[i]) {
          active[i] = 0;
          continue;
        }
        acc[i] = dd::cadd(acc[i], dd::cscale(term, w[i]));
        w[i] = dd::mul(w[i], step[i]);
      }
    }
    partial[b] = std::move(acc);
  };

  const unsigned threads = std::min<unsigned>(resolve_threads(opt.threads), static_cast<unsigned>(nblocks));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::vector<std::uint32_t> dbuf;
    for (std::size_t b = next++; b < nblocks; b = next++) run_block(b, dbuf);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<CDD> total(nx);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < nx; ++i) total[i] = dd::cadd(total[i], p[i]);
  }
  std::vector<std::complex<double>> out(nx);
  for (std::size_t i = 0; i < nx; ++i) {
    out[i] = {total[i].re.hi + total[i].re.lo, total[i].im.hi + total[i].im.lo};
  }
  return out;
}

std::complex<double> smoothed_twist(const CoefficientSource& src, const BigFloat& alpha, double X,
                                    const TwistOptions& opt) {
  return smoothed_twist_grid(src, alpha, {X}, opt).front();
}

std::vector<double> geometric_grid(double lo, double hi, int n) {
  if (n < 2 || !(lo > 0) || !(hi > lo)) throw DomainError("geometric_grid: need n >= 2 and 0 < lo < hi");
  std::vector<double> g(static_cast<std::size_t>(n));
  const double r = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo * std::exp(r * i);
  g.back() = hi;
  return g;
}

namespace {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

struct LsqResult {
  CVec coef;
  double residual = 0;
  double condition = 0;
};

LsqResult least_squares(const std::vector<double>& xs, const std::vector<std::complex<double>>& ys,
                        const std::vector<double>& powers) {
  const Eigen::Index rows = static_cast<Eigen::Index>(xs.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(powers.size());
  CMat A(rows, cols);
  CVec y(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    y(i) = ys[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < cols; ++j) A(i, j) = std::pow(xs[static_cast<std::size_t>(i)], powers[static_cast<std::size_t>(j)]);
  }
  Eigen::VectorXd scale(cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    scale(j) = A.col(j).norm();
    A.col(j) /= scale(j);
  }
  Eigen::JacobiSVD<CMat> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  LsqResult r;
  r.condition = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
  CVec c = svd.solve(y);
  r.residual = y.norm() > 0 ? (A * c - y).norm() / y.norm() : 0.0;
  for (Eigen::Index j = 0; j < cols; ++j) c(j) /= scale(j);
  r.coef = c;
  return r;
}

}  // namespace

TwistExperiment fit_twist(double alpha, const std::vector<double>& xs, const std::vector<std::complex<double>>& sums) {
  if (xs.size() != sums.size()) throw DomainError("fit_twist: grid and sums differ in length");
  if (xs.size() < 6) throw DomainError("fit_twist: need at least 6 grid points");
  TwistExperiment e;
  e.alpha = alpha;
  e.xs = xs;
  e.sums = sums;

  const LsqResult base = least_squares(xs, sums, {0.75, 0.25, 0.0, -0.25});
  e.condition = base.condition;
  e.residual = base.residual;
  if (!(base.condition <= 1e8)) {
    throw FitUnstable("residue fit: design matrix condition number " + std::to_string(base.condition) + " > 1e8");
  }
  for (int j = 0; j < 4; ++j) e.c[j] = base.coef(j);

  // with an extra X^1 column the genuine model leaves that coefficient at noise level
  const LsqResult aug = least_squares(xs, sums, {1.0, 0.75, 0.25, 0.0, -0.25});
  e.x_term = aug.coef(0);
  double smax = 0;
  for (const auto& s : sums) smax = std::max(smax, std::abs(s));
  const double xmax = *std::max_element(xs.begin(), xs.end());
  if (std::abs(e.x_term) * xmax > 1e-4 * std::max(smax, 1e-300) && aug.residual < 1e-2 * base.residual) {
    throw UnexpectedPole("residue fit: sums carry an X^1 term of size " + std::to_string(std::abs(e.x_term)));
  }
  return e;
}

TwistExperiment residue_fit(const CoefficientSource& src, const BigFloat& alpha, const std::vector<double>& xs,
                            const TwistOptions& opt, std::optional<double> d1) {
  const SpectrumResult sp = spectrum_member(src, alpha, BigFloat(1e-12));
  if (!sp.member) {
    throw DomainError("residue_fit: alpha = " + alpha.to_string(12) + " is not in the spectrum of " + src.name());
  }
  const auto sums = smoothed_twist_grid(src, alpha, xs, opt);
  TwistExperiment e = fit_twist(alpha.to_double(), xs, sums);
  e.terms = twist_cutoff(*std::max_element(xs.begin(), xs.end()));
  e.in_spectrum = true;
  e.m = sp.m;

  if (!d1) {
    const auto g = src.gamma();
    if (!g) {
      e.flags.push_back("no-gamma-data");
    } else {
      d1 = structural_symbolic(*g, 1).d[1].to_complex().re.to_double();
    }
  }
  const BigComplex am = src.coeffs(sp.m).back();
  const std::complex<double> a_m(am.re.to_double(), am.im.to_double());
  const double a = e.alpha;
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> rho0 = std::exp(i * M_PI / 4.0) * std::conj(a_m) / std::sqrt(a);
  e.predicted_c0 = rho0 * std::tgamma(0.75);
  e.rel_error_c0 = std::abs(e.c[0] - *e.predicted_c0) / std::abs(*e.predicted_c0);
  if (d1) {
    const std::complex<double> rho1 = rho0 * *d1 / (-2.0 * M_PI * i) / a;
    e.predicted_c1 = rho1 * std::tgamma(0.25);
    if (std::abs(*e.predicted_c1) > 0) e.rel_error_c1 = std::abs(e.c[1] - *e.predicted_c1) / std::abs(*e.predicted_c1);
  }
  return e;
}

}  // namespace lsharp
