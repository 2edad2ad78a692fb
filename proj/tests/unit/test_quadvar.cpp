#include <doctest.h>

#include <future>
#include <random>

#include "fixtures.hpp"
#include "lsharp/error.hpp"
#include "lsharp/hfun/structural.hpp"
#include "lsharp/quadvar/quadform.hpp"
#include "lsharp/quadvar/wpoly.hpp"

using namespace lsharp;
using fx::q;
using fx::sq;

namespace {

std::vector<GammaFactor> test_data() {
  return {fx::hecke(sq(1, 2)), fx::hecke(sq(3, 2)), fx::hecke(sq(11, 2)),
          fx::maass(0, sq(1)), fx::maass(0, sq(2)), fx::maass(1, sq(1)), fx::maass(1, sq(2))};
}

ExactScalar rat(long a, long b = 1) { return ExactScalar(q(a, b)); }

}  // namespace

TEST_CASE("akv") {
  CHECK(akv(0, 0) == 1);
  CHECK(akv(3, 1) == q(1, 16));
  CHECK(akv(4, 1) == q(-5, 128));
  CHECK(akv(6, 2) == q(1, 256));
  CHECK(akv(7, 2) == 2 * q(1, 16) * q(-5, 128));
  CHECK(akv(5, 2) == 0);
  CHECK(akv(4, 0) == 0);
}

TEST_CASE("A constants") {
  CHECK(a_constant(0, 0, 0, 0, 0) == rat(1));
  CHECK(a_constant(0, 0, 0, 0, 1) == rat(-1, 2));
  CHECK_THROWS_AS(a_constant(0, 1, 0, 0, 0), DomainError);
}

TEST_CASE("low order W polynomials") {
  const auto w0 = w_poly(0);
  REQUIRE(w0->terms.size() == 1);
  CHECK(w0->terms.begin()->second == rat(1));
  CHECK(w0->terms.begin()->first.ell == 0);

  // W1 = (s - 1/4) α D0
  const auto w1 = w_poly(1);
  REQUIRE(w1->terms.size() == 2);
  CHECK(w1->terms.at({1, 1, 0}) == rat(1));
  CHECK(w1->terms.at({0, 1, 0}) == rat(-1, 4));
  CHECK(w1->at(q(1, 4)).empty());
  CHECK(w_poly(1) == w1);
}

TEST_CASE("W polynomial shape") {
  for (long m = 0; m <= 10; ++m) {
    const auto w = w_poly(m);
    CHECK(w->alpha_degree() <= m);
    CHECK(2 * w->max_ell() <= m);
  }
}

TEST_CASE("residue identities") {
  CHECK(residue_identity(1).is_zero());

  const ResidueIdentity r2 = residue_identity(2);
  REQUIRE(r2.coeffs.count(2) == 1);
  CHECK_FALSE(r2.coeffs.at(2).empty());
  for (const auto& [lh, c] : r2.coeffs.at(2)) CHECK(lh.first + lh.second == 1);

  for (long M = 1; M <= 8; ++M) {
    const ResidueIdentity r = residue_identity(M);
    CHECK(r.coeffs.count(0) == 0);
    for (const auto& [deg, f] : r.coeffs) CHECK(deg >= 1);
  }
}

TEST_CASE("structural invariants satisfy every residue identity exactly") {
  for (const auto& g : test_data()) {
    const auto si = structural_symbolic(g, 8);
    for (long M = 1; M <= 8; ++M) {
      for (const auto& [deg, v] : residue_identity(M).eval(si.d)) {
        INFO("M = " << M << " alpha^" << deg << " -> " << v.to_string());
        CHECK(v.is_exact());
        CHECK(v.is_zero());
      }
    }
  }
}

TEST_CASE("quadratic forms") {
  for (long N = 2; N <= 5; ++N) {
    const QuadraticForm Q = quad_form(N);
    CHECK(Q.normalized);
    ExactScalar sum;
    for (const auto& [lh, c] : Q.alpha) {
      CHECK(lh.first + lh.second <= N);
      CHECK(c.is_rational());
      if (lh == std::pair<long, long>{0, N} || lh == std::pair<long, long>{N, 0}) sum += c;
    }
    CHECK(sum == rat(1));
    for (const auto& g : test_data()) CHECK(Q.eval(structural_symbolic(g, N).d).is_zero());
  }
  CHECK_THROWS_AS(quad_form(1), DomainError);
}

TEST_CASE("Q1 cancels as a quadratic form") {
  const QuadraticForm q1 = quad_form_raw(1);
  CHECK_FALSE(q1.alpha.empty());
  CHECK(q1.scale.is_zero());
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> pick(-50, 50);
  for (int i = 0; i < 10; ++i) {
    const std::vector<Scalar> d = {sq(pick(rng), 7), sq(pick(rng), 3)};
    CHECK(q1.eval(d).is_zero());
  }
}

TEST_CASE("recursion reproduces the Stirling-side invariants") {
  const RecursionE E = recursion(6);
  REQUIRE(E.E.size() == 7);
  CHECK(E.E[2].degree() == 2);
  std::vector<GammaFactor> cases = test_data();
  for (int eps : {0, 1}) cases.push_back(fx::maass(eps, sq(7, 2)));
  for (const auto& g : cases) {
    const auto si = structural_symbolic(g, 6);
    const ExactScalar d1 = si.d[1].exact();
    for (long l = 0; l <= 6; ++l) {
      INFO("l = " << l);
      CHECK(E.E[l].eval(d1) == si.d[l].exact());
    }
  }
}

TEST_CASE("recursion is consistent with every quadratic form") {
  const long Lmax = 6;
  const RecursionE E = recursion(Lmax);
  for (long N = 2; N <= Lmax; ++N) {
    ExactPoly total;
    for (const auto& [lh, c] : quad_form(N).alpha) {
      total = total + c * (E.E[lh.first] * E.E[lh.second]);
    }
    CHECK(total.c.empty());
  }
}

TEST_CASE("polynomial dependence on the parameters") {
  const ExtractedPoly p1 = poly_extract(PolyKind::Hecke, 1);
  CHECK(p1.coeffs == std::vector<mpq_class>{q(-1, 8), q(0), q(2)});
  CHECK(p1.to_string() == "2*mu^2 - 1/8");

  const ExtractedPoly q1 = poly_extract(PolyKind::Maass, 1);
  CHECK(q1.coeffs == std::vector<mpq_class>{q(-1, 8), q(0), q(-2)});

  for (long l = 0; l <= 3; ++l) {
    const ExtractedPoly p = poly_extract(PolyKind::Hecke, l);
    CHECK(static_cast<long>(p.coeffs.size()) == 2 * l + 1);
    // ε independence is checked inside; only even powers appear
    const ExtractedPoly m = poly_extract(PolyKind::Maass, l);
    for (std::size_t j = 1; j < m.coeffs.size(); j += 2) CHECK(m.coeffs[j] == 0);
  }
}

TEST_CASE("w_poly cache under concurrent access") {
  std::vector<std::future<std::shared_ptr<const WPoly>>> jobs;
  for (int i = 0; i < 4; ++i) jobs.push_back(std::async(std::launch::async, [] { return w_poly(9); }));
  const auto first = jobs[0].get();
  for (std::size_t i = 1; i < jobs.size(); ++i) CHECK(jobs[i].get() == first);
}
