#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "lsharp/error.hpp"
#include "lsharp/lfun/coeffs.hpp"
#include "lsharp/lfun/twist.hpp"
#include "lsharp/lfun/zeta.hpp"
#include "lsharp/numkern/special.hpp"

using namespace lsharp;
using fx::q;

namespace {

BigFloat rel(const BigComplex& a, const BigComplex& b) { return abs(a - b) / abs(b); }

// straightforward multiprecision version of the smoothed sum
std::complex<double> direct_twist(const std::vector<BigComplex>& a, const BigFloat& alpha, double X) {
  const std::uint64_t cut = twist_cutoff(X);
  BigComplex acc(0);
  const BigFloat two_pi = ldexp(BigFloat::pi(), 1);
  for (std::uint64_t n = 1; n <= cut; ++n) {
    const BigFloat nn(static_cast<long>(n));
    const BigComplex ph = expi(-two_pi * alpha * sqrt(nn));
    acc += a[n - 1] * ph * exp(-nn / BigFloat(X));
  }
  return {acc.re.to_double(), acc.im.to_double()};
}

}  // namespace

TEST_CASE("divisor counts") {
  const auto d = CoefficientSource::divisor_d2().exact(6);
  CHECK(d == std::vector<mpq_class>{1, 2, 2, 3, 2, 4});

  // segmented sieve against trial division away from the origin
  std::vector<std::uint32_t> seg;
  divisor_counts(999900, 1000100, seg);
  REQUIRE(seg.size() == 200);
  for (std::uint64_t n = 999900; n < 1000100; ++n) {
    std::uint32_t c = 0;
    for (std::uint64_t k = 1; k * k <= n; ++k) {
      if (n % k == 0) c += (k * k == n) ? 1 : 2;
    }
    CHECK(seg[n - 999900] == c);
  }
}

TEST_CASE("Ramanujan tau") {
  const auto t = ramanujan_tau(1000);
  CHECK(t[0] == 1);
  CHECK(t[1] == -24);
  CHECK(t[2] == 252);
  CHECK(t[3] == -1472);
  CHECK(t[5] == t[1] * t[2]);
  CHECK(t[10] == 534612);
  const auto s11 = sigma_table(11, 1000);
  for (std::size_t n = 0; n < 1000; ++n) {
    mpz_class diff = t[n] - s11[n];
    CHECK(mpz_divisible_ui_p(diff.get_mpz_t(), 691) != 0);
  }
}

TEST_CASE("normalized cusp form coefficients") {
  const auto src = CoefficientSource::eta_power24();
  const auto a = src.coeffs(2);
  CHECK(a[0].re == BigFloat(1));
  // τ(2)/2^{11/2}
  CHECK(rel(a[1], BigComplex(BigFloat(-24) / pow(BigFloat(2), BigFloat(q(11, 2))))) < BigFloat(1e-70));
  CHECK(src.gamma().has_value());
}

TEST_CASE("higher weight eigenforms") {
  const std::vector<std::pair<long, long>> a2 = {{16, 216}, {18, -528}, {20, 456}, {22, -288}, {26, -48}};
  for (const auto& [k, want] : a2) {
    INFO("k = " << k);
    const auto e = CoefficientSource::eisenstein_product(k).exact(12);
    CHECK(e[0] == 1);
    CHECK(e[1] == want);
    CHECK(e[5] == e[1] * e[2]);
    CHECK(e[11] == e[2] * e[3]);
    mpz_class p = 1;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k - 1));
    CHECK(e[3] == e[1] * e[1] - p);
  }
  CHECK_THROWS_AS(CoefficientSource::eisenstein_product(24), DomainError);
}

TEST_CASE("coefficient files") {
  const auto s = CoefficientSource::parse("# lfun-coeffs v1; normalization=a1; shift=0\n1 2\n2 -4 1\n3 0.5\n");
  const auto a = s.coeffs(3);
  CHECK(a[0].re == BigFloat(1));
  CHECK(a[1].re == BigFloat(-2));
  CHECK(a[1].im == BigFloat(0.5));
  CHECK(a[2].re == BigFloat(0.25));
  CHECK(s.limit() == 3);
  CHECK_THROWS_AS(s.coeffs(4), BudgetExceeded);
  CHECK_FALSE(s.gamma().has_value());

  const auto raw = CoefficientSource::parse("# lfun-coeffs v1; normalization=none; shift=0.5\n1 3\n2 1\n");
  CHECK(raw.coeffs(1)[0].re == BigFloat(3));
  // 2^{i/2}
  CHECK(rel(raw.coeffs(2)[1], expi(log(BigFloat(2)) / BigFloat(2))) < BigFloat(1e-70));

  auto fails_at = [](const std::string& text, std::size_t line, std::size_t col) {
    try {
      CoefficientSource::parse(text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == col);
      return;
    }
    FAIL("no ParseError for: " << text);
  };
  fails_at("", 1, 1);
  fails_at("# lfun-coeffs v2; normalization=a1; shift=0\n1 1\n", 1, 1);
  fails_at("# lfun-coeffs v1; normalization=a1; shift=0\n1 1\n3 1\n", 3, 1);
  fails_at("# lfun-coeffs v1; normalization=a1; shift=0\n1 1\n2 x1\n", 3, 3);
  fails_at("# lfun-coeffs v1; normalization=a1; shift=0\n1 1 2 3\n", 2, 1);
  fails_at("# lfun-coeffs v1; normalization=a1; shift=0\n", 1, 1);
  CHECK_THROWS_AS(CoefficientSource::file("/nonexistent/coeffs.txt"), IoError);
}

TEST_CASE("zeta by Euler-Maclaurin") {
  const BigFloat tol = pow10(-static_cast<double>(working_precision()) / 2);
  const BigComplex z2 = zeta_em(BigComplex(2)), zm1 = zeta_em(BigComplex(-1)), z4 = zeta_em(BigComplex(4));
  const BigComplex s(BigFloat(0.3), BigFloat(40));
  const BigComplex zs = zeta_em(s), zsbar = zeta_em(conj(s));
  {
    // oracles carry more bits than the tolerance needs
    PrecisionScope ps(bits_for_tolerance(working_precision(), 2));
    const BigFloat pi = BigFloat::pi();
    CHECK(rel(z2, BigComplex(pi * pi / BigFloat(6))) < tol);
    CHECK(rel(zm1, BigComplex(BigFloat(-1) / BigFloat(12))) < tol);
    CHECK(rel(z4, BigComplex(pi * pi * pi * pi / BigFloat(90))) < tol);
    // ζ(s̄) = conj ζ(s)
    CHECK(rel(zsbar, conj(zs)) < tol);
  }
  CHECK(abs(zeta_em(BigComplex(BigFloat(0.5), BigFloat(std::string_view("14.134725"))))) < BigFloat(1e-6));
  CHECK_THROWS_AS(zeta_em(BigComplex(1)), PoleError);
  CHECK_THROWS_AS(zeta_em(BigComplex(BigFloat(1) + BigFloat(1e-8), BigFloat(0))), PoleError);
}

TEST_CASE("functional equation residual for zeta squared") {
  const BigFloat bound = pow10(-static_cast<double>(working_precision()) / 2 + 10);
  for (double sigma : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (double t : {-10.0, -4.5, 1.0, 5.0, 10.0}) {
      INFO("s = " << sigma << " + " << t << "i");
      CHECK(abs(fe_residual_zeta2(BigComplex(sigma, t))) < bound);
    }
  }
  CHECK(abs(fe_residual_zeta2(BigComplex(BigFloat(q(1, 2))))) < bound);
  // a wrong root number shows up immediately
  const BigComplex s(0.3, 2.0);
  const BigComplex z = zeta_em(s), zd = zeta_em(BigComplex(1) - s);
  CHECK(abs(z * z + zd * zd) > BigFloat(1e-3));
}

TEST_CASE("spectrum membership") {
  const auto d2 = CoefficientSource::divisor_d2();
  const auto eta = CoefficientSource::eta_power24();
  const BigFloat tol(1e-20);
  SpectrumResult r = spectrum_member(d2, BigFloat(2), tol);
  CHECK(r.member);
  CHECK(r.m == 1);
  r = spectrum_member(eta, BigFloat(2) * sqrt(BigFloat(2)), tol);
  CHECK(r.member);
  CHECK(r.m == 2);
  CHECK_FALSE(spectrum_member(d2, BigFloat(1), tol).member);
  CHECK_FALSE(spectrum_member(d2, BigFloat(2) + BigFloat(1e-10), tol).member);
  CHECK(spectrum_member(d2, BigFloat(2) + BigFloat(1e-10), BigFloat(1e-6)).member);

  // a source with vanishing coefficients
  const auto sparse = CoefficientSource::parse("# lfun-coeffs v1; normalization=a1; shift=0\n1 1\n2 0\n3 -1\n4 0\n");
  CHECK_FALSE(spectrum_member(sparse, BigFloat(2) * sqrt(BigFloat(2)), tol).member);
  CHECK(spectrum_member(sparse, BigFloat(2) * sqrt(BigFloat(3)), tol).member);

  for (const auto& src : {d2, eta, CoefficientSource::eisenstein_product(16)}) {
    const auto ex = src.exact(100);
    for (long m = 1; m <= 100; ++m) {
      const auto sp = spectrum_member(src, BigFloat(2) * sqrt(BigFloat(m)), tol);
      CHECK(sp.m == m);
      CHECK(sp.member == (ex[static_cast<std::size_t>(m - 1)] != 0));
    }
  }
}

TEST_CASE("smoothed twist against a multiprecision sum") {
  const auto d2 = CoefficientSource::divisor_d2();
  const BigFloat alpha = BigFloat(2);
  const auto a = d2.coeffs(static_cast<long>(twist_cutoff(25.0)));
  for (double X : {3.0, 25.0}) {
    const auto got = smoothed_twist(d2, alpha, X);
    const auto want = direct_twist(a, alpha, X);
    CHECK(std::abs(got - want) <= 1e-14 * std::abs(want));
  }

  // complex coefficients through a file
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  std::ostringstream text;
  text << "# lfun-coeffs v1; normalization=none; shift=0\n";
  for (int n = 1; n <= 1000; ++n) text << n << " " << u(rng) << " " << u(rng) << "\n";
  const auto file = CoefficientSource::parse(text.str());
  const BigFloat beta = sqrt(BigFloat(7));
  const auto got = smoothed_twist(file, beta, 10.0);
  const auto want = direct_twist(file.coeffs(1000), beta, 10.0);
  CHECK(std::abs(got - want) <= 1e-14 * std::abs(want));
  CHECK_THROWS_AS(smoothed_twist(file, beta, 100.0), BudgetExceeded);

  // tiny X keeps only a(1)e^{-2πiα}e^{-1/X}
  const auto tiny = smoothed_twist(d2, sqrt(BigFloat(2)), 0.01);
  const std::complex<double> first = std::polar(std::exp(-100.0), -2 * M_PI * std::sqrt(2.0));
  CHECK(std::abs(tiny - first) <= 1e-14 * std::abs(first));

  CHECK_THROWS_AS(smoothed_twist(d2, BigFloat(-1), 10.0), DomainError);
  CHECK_THROWS_AS(smoothed_twist(d2, BigFloat(2), 0.0), DomainError);
  TwistOptions small;
  small.max_terms = 1000;
  CHECK_THROWS_AS(smoothed_twist(d2, BigFloat(2), 1e3, small), BudgetExceeded);
}

TEST_CASE("smoothed twist is independent of the thread count") {
  const auto d2 = CoefficientSource::divisor_d2();
  const auto xs = geometric_grid(100, 3000, 4);
  TwistOptions opt;
  opt.block = 4096;
  opt.threads = 1;
  const auto one = smoothed_twist_grid(d2, BigFloat(2), xs, opt);
  for (unsigned t : {2u, 3u, 8u}) {
    opt.threads = t;
    const auto many = smoothed_twist_grid(d2, BigFloat(2), xs, opt);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      CHECK(std::memcmp(&one[i], &many[i], sizeof(one[i])) == 0);
    }
  }
  // the grid call agrees with separate single-X calls
  opt.threads = 2;
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(smoothed_twist(d2, BigFloat(2), xs[i], opt) == one[i]);
}

TEST_CASE("residue fit for zeta squared") {
  const auto d2 = CoefficientSource::divisor_d2();
  const auto xs = geometric_grid(1e3, 1e5, 7);
  const TwistExperiment e = residue_fit(d2, BigFloat(2), xs);
  CHECK(e.m == 1);
  const std::complex<double> rho0 = std::polar(1.0 / std::sqrt(2.0), M_PI / 4);
  CHECK(std::abs(*e.predicted_c0 - rho0 * std::tgamma(0.75)) < 1e-14);
  const std::complex<double> rho1 = rho0 * (-1.0 / 8) / std::complex<double>(0, -2 * M_PI) / 2.0;
  CHECK(std::abs(*e.predicted_c1 - rho1 * std::tgamma(0.25)) < 1e-14);
  CHECK(*e.rel_error_c0 < 1e-4);
  CHECK(*e.rel_error_c1 < 0.05);
  CHECK(e.condition < 1e4);

  // the leading term scales like X^{3/4}
  const auto two = smoothed_twist_grid(d2, BigFloat(2), {1e4, 4e4});
  const auto lead = [&](double X, std::complex<double> s) { return s - e.c[1] * std::pow(X, 0.25) - e.c[2]; };
  CHECK(std::abs(lead(4e4, two[1]) / lead(1e4, two[0]) - std::pow(4.0, 0.75)) < 1e-6);

  // off the spectrum the X^{3/4} coefficient vanishes
  CHECK_THROWS_AS(residue_fit(d2, BigFloat(1), xs), DomainError);
  const TwistExperiment off = fit_twist(1.0, xs, smoothed_twist_grid(d2, BigFloat(1), xs));
  CHECK(std::abs(off.c[0]) < 1e-4 * std::abs(*e.predicted_c0));
}

TEST_CASE("residue fit for the discriminant") {
  const auto eta = CoefficientSource::eta_power24();
  const auto xs = geometric_grid(30, 3000, 7);
  const TwistExperiment e = residue_fit(eta, BigFloat(2), xs);
  CHECK(std::abs(*e.predicted_c0 - std::polar(std::tgamma(0.75) / std::sqrt(2.0), M_PI / 4)) < 1e-14);
  CHECK(*e.rel_error_c0 < 0.02);
  CHECK(*e.rel_error_c1 < 0.2);
}

TEST_CASE("fit guards") {
  const auto xs = geometric_grid(1e3, 1e6, 7);
  std::vector<std::complex<double>> ys;
  for (double X : xs) ys.emplace_back(0.5 * std::pow(X, 0.75) + 2.0 - 0.1 * std::pow(X, 0.25));
  const TwistExperiment ok = fit_twist(2, xs, ys);
  CHECK(std::abs(ok.c[0] - 0.5) < 1e-9);
  CHECK(std::abs(ok.c[1] + 0.1) < 1e-7);

  auto pole = ys;
  for (std::size_t i = 0; i < xs.size(); ++i) pole[i] += 1e-3 * xs[i];
  CHECK_THROWS_AS(fit_twist(2, xs, pole), UnexpectedPole);

  std::vector<double> bunched;
  for (int i = 0; i < 7; ++i) bunched.push_back(1e4 * (1 + 1e-9 * i));
  CHECK_THROWS_AS(fit_twist(2, bunched, ys), FitUnstable);
  CHECK_THROWS_AS(fit_twist(2, {1, 2, 3}, {1, 2, 3}), DomainError);
}
