#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "lsharp/error.hpp"
#include "lsharp/gamma/invariants.hpp"
#include "lsharp/hfun/expsum.hpp"
#include "lsharp/hfun/hfunction.hpp"
#include "lsharp/hfun/structural.hpp"
#include "lsharp/numkern/precision.hpp"
#include "lsharp/numkern/special.hpp"

using namespace lsharp;
using fx::q;
using fx::sq;

namespace {

GammaFactor single(const Scalar& mu) {
  GammaFactor g;
  g.Q = QFactor::from_uv(q(1, 4), -2);
  g.terms = {{q(1), mu}};
  return g;
}

GaussRational coeff_of(const ExpTerm& t) {
  auto g = t.coeff.as_gaussian();
  REQUIRE(g.has_value());
  return *g;
}

BigFloat ulp_scale(const ExpSum& e, const BigComplex& s) {
  BigFloat acc(0);
  for (const auto& t : e.terms) {
    acc += abs(t.coeff.value()) * exp(-(BigFloat(t.frequency) * BigFloat::pi() * s.im));
  }
  return acc * ldexp(BigFloat(1), -working_precision());
}

std::vector<mpq_class> frequencies(const ExpSum& e) {
  std::vector<mpq_class> out;
  for (const auto& t : e.terms) out.push_back(t.frequency);
  return out;
}

void check_d(const StructuralInvariants& si, const std::vector<mpq_class>& want) {
  REQUIRE(si.d.size() >= want.size());
  for (std::size_t l = 0; l < want.size(); ++l) {
    INFO("l = " << l << " got " << si.d[l].to_string());
    CHECK(fx::exact_eq(si.d[l], Scalar(want[l])));
  }
}

}  // namespace

TEST_CASE("s_expand of zeta squared is 2 - e^{i pi s} - e^{-i pi s}") {
  const ExpSum e = s_expand(fx::zeta2());
  REQUIRE(e.terms.size() == 3);
  CHECK(frequencies(e) == std::vector<mpq_class>{q(-1), q(0), q(1)});
  CHECK(coeff_of(e.terms[0]) == GaussRational(-1));
  CHECK(coeff_of(e.terms[1]) == GaussRational(2));
  CHECK(coeff_of(e.terms[2]) == GaussRational(-1));
  CHECK(e.N() == 2);
  CHECK(e.symmetric());
  CHECK(e.endpoints_match(BigComplex(1)));
  CHECK_FALSE(e.endpoints_match(BigComplex(-1)));
}

TEST_CASE("Hecke virtual factor gives a single sine") {
  const ExpSum e = s_expand(fx::hecke(sq(11, 2)));
  REQUIRE(e.N() == 1);
  CHECK(coeff_of(e.terms[0]) == GaussRational(-1));
  CHECK(coeff_of(e.terms[1]) == GaussRational(-1));

  // generic μ: S = 2 sin(π(s+μ)), compared pointwise
  const GammaFactor g = fx::hecke(sq(7, 3));
  const ExpSum e2 = s_expand(g);
  CHECK(e2.N() == 1);
  const BigComplex s(BigFloat("0.37"), BigFloat("-1.2"));
  const BigComplex direct = sin((s + BigComplex(BigFloat(q(7, 3)))) * BigFloat::pi()) * BigFloat(2);
  CHECK(abs(e2.eval(s) - direct) <= ulp_scale(e2, s) * BigFloat(32));
}

TEST_CASE("duplication leaves the expansion unchanged") {
  for (const auto& g : {fx::hecke(sq(11, 2)), fx::hecke(sq(5, 7)), fx::zeta2(), fx::maass(1, sq(3))}) {
    const auto dup = duplicate(g, 1);
    CHECK(s_expand(dup.g) == s_expand(g));
  }
  // 4 sin(x) sin(x + π/2) = 2 sin(2x)
  GammaFactor a, b;
  a.terms = {{q(1, 2), sq(0)}, {q(1, 2), sq(1, 2)}};
  b.terms = {{q(1), sq(0)}};
  CHECK(s_expand(a) == s_expand(b));
}

TEST_CASE("expansion agrees with the sine product at random points") {
  std::mt19937_64 rng(20261015);
  std::uniform_real_distribution<double> re(-3.0, 3.0), im(-2.0, 2.0);
  const std::vector<GammaFactor> cases = {fx::zeta2(), fx::hecke(sq(11, 2)), fx::maass(0, sq(5)),
                                          fx::maass(1, sq(2, 3)), single(fx::gauss(1, 3, 1, 5))};
  for (const auto& g : cases) {
    const ExpSum e = s_expand(g);
    for (int k = 0; k < 50; ++k) {
      const BigComplex s(BigFloat(re(rng)), BigFloat(im(rng)));
      const BigComplex v = e.eval(s), w = s_direct(g, s);
      CHECK(abs(v - w) <= ulp_scale(e, s) * BigFloat(32));
    }
  }
}

TEST_CASE("symmetry invariants for exact families") {
  for (long k = 2; k <= 40; k += 2) {
    const GammaFactor g = fx::hecke(sq(k - 1, 2), k % 4 == 0 ? 1 : -1);
    const ExpSum e = s_expand(g);
    CHECK(e.terms.front().frequency == -1);
    CHECK(e.terms.back().frequency == 1);
    CHECK(e.symmetric());
    const InvariantSet inv = invariants(g);
    CHECK(e.endpoints_match(inv.root_number->to_complex()));
  }
  for (int eps : {0, 1}) {
    for (long kappa : {0L, 1L, 5L}) {
      const GammaFactor g = fx::maass(eps, sq(kappa), eps == 0 ? 1 : -1);
      const ExpSum e = s_expand(g);
      CHECK(e.symmetric());
      for (const auto& t : e.terms) CHECK_FALSE(t.coeff.is_zero());
      const InvariantSet inv = invariants(g);
      CHECK(e.endpoints_match(inv.root_number->to_complex()));
    }
  }
}

TEST_CASE("numeric mu follows the exact expansion") {
  GammaFactor exact = fx::maass(1, sq(3));
  GammaFactor num = exact;
  for (auto& t : num.terms) t.mu = Scalar(t.mu.to_complex());
  const ExpSum a = s_expand(exact), b = s_expand(num);
  REQUIRE(a.terms.size() == b.terms.size());
  for (std::size_t j = 0; j < a.terms.size(); ++j) {
    CHECK(a.terms[j].frequency == b.terms[j].frequency);
    CHECK_FALSE(b.terms[j].coeff.is_exact());
    CHECK(relative_error(a.terms[j].coeff.value(), b.terms[j].coeff.value()) < pow10(-70));
  }
}

TEST_CASE("h_eval basics") {
  GammaFactor empty;
  CHECK(abs(h_eval(empty, BigComplex(BigFloat("0.3"), BigFloat(2))) - BigComplex(1)) == BigFloat(0));

  // Γ-product oracle for ζ²: (2π)^{-2} π^{2s-1} Γ((1-s)/2)² Γ(1-s/2)²
  const BigComplex s(BigFloat("0.3"), BigFloat(2));
  const BigComplex one(1);
  const BigComplex g1 = gamma((one - s) / BigFloat(2)), g2 = gamma(one - s / BigFloat(2));
  const BigFloat two_pi = BigFloat::pi() * BigFloat(2);
  const BigComplex want = pow(BigFloat::pi(), s * BigFloat(2) - one) * g1 * g1 * g2 * g2 / (two_pi * two_pi);
  CHECK(relative_error(h_eval(fx::zeta2(), s), want) < ldexp(BigFloat(1), 13 - working_precision()));

  CHECK_THROWS_AS(h_eval(fx::hecke(sq(11, 2)), BigComplex(BigFloat(mpq_class(13, 2)) + ldexp(BigFloat(1), -40))), PoleError);
}

TEST_CASE("S h is an involution under s -> 1-s") {
  const std::vector<GammaFactor> cases = {fx::zeta2(), fx::hecke(sq(11, 2)), fx::maass(0, sq(5)),
                                          fx::maass(1, sq(2))};
  const BigComplex one(1);
  for (const auto& g : cases) {
    for (const char* re : {"0.3", "0.5", "-1.7"}) {
      const BigComplex s(BigFloat(re), BigFloat("1.25"));
      const BigComplex prod = s_direct(g, s) * h_eval(g, s) * s_direct(g, one - s) * h_eval(g, one - s);
      CHECK(abs(prod - one) < pow10(-60));
    }
  }
}

TEST_CASE("structural_symbolic closed forms") {
  const auto z = structural_symbolic(fx::zeta2(), 4);
  check_d(z, {q(1), q(-1, 8), q(9, 128), q(-75, 1024), q(3675, 32768)});
  CHECK(fx::exact_eq(z.c, sq(1)));
  CHECK(z.method == StructuralMethod::Symbolic);

  check_d(structural_symbolic(fx::hecke(sq(11, 2)), 3), {q(1), q(483, 8), q(229425, 128), q(35102025, 1024)});
  for (int eps : {0, 1}) {
    const auto m = structural_symbolic(fx::maass(eps, sq(2)), 3);
    check_d(m, {q(1), q(-65, 8), q(4745, 128), q(-422305, 3072)});
    CHECK(fx::exact_eq(m.c, sq(1)));
  }
}

TEST_CASE("d[1] = chi - 1/8") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> num(1, 40), den(1, 9);
  for (int k = 0; k < 10; ++k) {
    const GammaFactor h = fx::hecke(sq(num(rng), den(rng)));
    const auto si = structural_symbolic(h, 2);
    CHECK(fx::exact_eq(si.d[0], sq(1)));
    CHECK(fx::exact_eq(si.d[1], chi_of(h) - sq(1, 8)));
    const GammaFactor m = fx::maass(static_cast<int>(k % 2), sq(num(rng), den(rng)));
    CHECK(fx::exact_eq(structural_symbolic(m, 2).d[1], chi_of(m) - sq(1, 8)));
  }
}

TEST_CASE("structural_symbolic is invariant under duplication") {
  for (const auto& g : {fx::hecke(sq(11, 2)), fx::zeta2(), fx::maass(1, sq(3))}) {
    const auto a = structural_symbolic(g, 4);
    const auto dup = duplicate(g, 1);
    const auto b = structural_symbolic(dup.g, 4);
    for (long l = 0; l <= 4; ++l) CHECK(fx::exact_eq(a.d[l], b.d[l]));
    // c = ω_F/ω, and ω_F does not move
    CHECK(abs(a.c.to_complex() * g.omega->to_complex() - b.c.to_complex() * dup.g.omega->to_complex()) <
          pow10(-70));
  }
}

TEST_CASE("prefactor mismatch") {
  GammaFactor deg1;
  deg1.Q = QFactor::from_uv(q(1), -1);
  deg1.terms = {{q(1, 2), sq(0)}};
  CHECK_THROWS_AS(structural_symbolic(deg1, 2), PrefactorMismatch);

  GammaFactor cond = fx::zeta2();
  cond.Q = QFactor::from_uv(q(1, 3), -2);
  CHECK_THROWS_AS(structural_symbolic(cond, 2), PrefactorMismatch);
  CHECK_THROWS_AS(structural_numeric(cond, 2), PrefactorMismatch);

  GammaFactor shifted = single(fx::gauss(11, 2, 1, 1));
  CHECK_THROWS_AS(structural_symbolic(shifted, 2), PrefactorMismatch);
}

TEST_CASE("numeric and symbolic structural invariants agree") {
  const BigFloat tol = pow10(-static_cast<double>(working_precision()) / 4.0);
  for (const auto& g : {fx::hecke(sq(11, 2)), fx::maass(1, sq(3)), fx::zeta2()}) {
    const auto sym = structural_symbolic(g, 4);
    const auto num = structural_numeric(g, 4);
    CHECK(num.method == StructuralMethod::Numeric);
    CHECK(abs(num.c.to_complex() - sym.c.to_complex()) <= num.c_error + tol);
    for (long l = 0; l <= 4; ++l) {
      const BigComplex a = sym.d[l].to_complex(), b = num.d[l].to_complex();
      INFO("l = " << l << " sym " << a.to_string(20) << " num " << b.to_string(20));
      CHECK(abs(a - b) <= tol * max(BigFloat(1), abs(a)));
      CHECK(abs(a - b) <= num.d_error[l] * BigFloat(4) + ldexp(abs(a), 8 - working_precision()));
    }
    CHECK(abs(num.d[0].to_complex() - BigComplex(1)) <= num.d_error[0] + tol);
  }
}

TEST_CASE("r_function") {
  const GammaFactor h = fx::hecke(sq(11, 2));
  const auto same = r_function(h, h, BigComplex(BigFloat("0.2"), BigFloat("0.4")));
  CHECK(same.is_constant);
  CHECK(abs(same.value - BigComplex(1)) < pow10(-70));

  const GammaFactor z = fx::zeta2();
  const GammaFactor v = virtual_gamma(MaassKind{0, sq(0)});
  const BigComplex s(BigFloat("0.7"), BigFloat(1));
  const auto r = r_function(z, v, s);
  CHECK(relative_error(r.value, s_direct(z, s) / s_direct(v, s)) < pow10(-70));
  CHECK(r.n_at_most_two);
  CHECK(r.is_constant);

  const auto hz = r_function(z, h, s);
  CHECK_FALSE(hz.is_constant);
  CHECK(relative_error(hz.value, s_direct(z, s) / s_direct(h, s)) < pow10(-70));

  CHECK_THROWS_AS(r_function(z, h, BigComplex(BigFloat("0.5"))), DivisionByZero);
}
