#include "lsharp/numkern/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "lsharp/error.hpp"

namespace lsharp {

namespace {

struct Rule {
  std::vector<BigFloat> nodes;    // on [-1, 1], positive half incl. 0 for odd n
  std::vector<BigFloat> weights;
};

// Legendre roots by Newton from the Chebyshev-like initial guess.
std::shared_ptr<const Rule> make_rule(long n, long bits) {
  PrecisionScope scope(bits + 16);
  auto rule = std::make_shared<Rule>();
  const BigFloat eps = ldexp(BigFloat(1), -bits);
  for (long i = 1; i <= (n + 1) / 2; ++i) {
    BigFloat x(std::cos(M_PI * (static_cast<double>(i) - 0.25) / (static_cast<double>(n) + 0.5)));
    BigFloat dp;
    for (int it = 0; it < 100; ++it) {
      BigFloat p0(1), p1 = x;
      for (long k = 2; k <= n; ++k) {
        BigFloat p2 = (BigFloat(2 * k - 1) * x * p1 - BigFloat(k - 1) * p0) / BigFloat(k);
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = BigFloat(n) * (x * p1 - p0) / (x * x - BigFloat(1));
      const BigFloat dx = p1 / dp;
      x -= dx;
      if (abs(dx) < eps) {
        // refresh derivative at the converged root
        BigFloat q0(1), q1 = x;
        for (long k = 2; k <= n; ++k) {
          BigFloat q2 = (BigFloat(2 * k - 1) * x * q1 - BigFloat(k - 1) * q0) / BigFloat(k);
          q0 = std::move(q1);
          q1 = std::move(q2);
        }
        dp = BigFloat(n) * (x * q1 - q0) / (x * x - BigFloat(1));
        break;
      }
    }
    rule->nodes.push_back(x.rounded(bits));
    rule->weights.push_back((BigFloat(2) / ((BigFloat(1) - x * x) * dp * dp)).rounded(bits));
  }
  return rule;
}

std::shared_ptr<const Rule> cached_rule(long n, long bits) {
  static std::mutex mutex;
  static std::map<std::pair<long, long>, std::shared_ptr<const Rule>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({n, bits});
    if (it != cache.end()) return it->second;
  }
  auto rule = make_rule(n, bits);
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(n, bits), rule).first->second;
}

BigComplex apply(const Rule& rule, long n, const std::function<BigComplex(const BigFloat&)>& f,
                 const BigFloat& a, const BigFloat& b, long& evals) {
  const BigFloat mid = (a + b) / BigFloat(2);
  const BigFloat half = (b - a) / BigFloat(2);
  BigComplex sum(BigFloat(0), BigFloat(0));
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const BigFloat& x = rule.nodes[i];
    const bool centre = (n % 2 == 1) && i + 1 == rule.nodes.size();
    BigComplex v = f(mid + half * x);
    if (!centre) v += f(mid - half * x);
    evals += centre ? 1 : 2;
    sum += v * rule.weights[i];
  }
  return sum * half;
}

}  // namespace

QuadratureResult integrate(const std::function<BigComplex(const BigFloat&)>& f, const BigFloat& a,
                           const BigFloat& b, const BigFloat& tol, long max_evaluations) {
  if (!(tol.sign() > 0)) throw DomainError("integrate: tolerance must be positive");
  const long bits = working_precision();
  // Enough nodes that smooth panels converge in one or two levels.
  const double digits = std::max(16.0, -std::log10(std::max(tol.to_double(), 1e-300)));
  const long n = 8 + static_cast<long>(digits * 0.6);
  const auto rule = cached_rule(n, bits);

  QuadratureResult res{BigComplex(BigFloat(0), BigFloat(0)), BigFloat(0), 0};
  struct Panel {
    BigFloat a, b;
    BigComplex whole;
    int depth;
  };
  std::vector<Panel> stack;
  stack.push_back({a, b, apply(*rule, n, f, a, b, res.evaluations), 0});
  const BigFloat total_len = abs(b - a);
  while (!stack.empty()) {
    Panel p = std::move(stack.back());
    stack.pop_back();
    const BigFloat m = (p.a + p.b) / BigFloat(2);
    BigComplex left = apply(*rule, n, f, p.a, m, res.evaluations);
    BigComplex right = apply(*rule, n, f, m, p.b, res.evaluations);
    const BigComplex refined = left + right;
    const BigFloat err = abs(refined - p.whole);
    const BigFloat budget = tol * abs(p.b - p.a) / total_len;
    if (err <= budget) {
      res.value += refined;
      res.error_estimate += err;
      continue;
    }
    if (res.evaluations > max_evaluations || p.depth > 60) {
      throw NonConvergence("integrate: evaluation budget exhausted (error estimate " +
                           err.to_string(6) + ")");
    }
    stack.push_back({m, p.b, std::move(right), p.depth + 1});
    stack.push_back({p.a, m, std::move(left), p.depth + 1});
  }
  return res;
}

QuadratureResult line_integral(const ComplexFn& f, const BigFloat& sigma, const BigFloat& t0,
                               const BigFloat& t1, const BigFloat& tol, long max_evaluations) {
  auto g = [&](const BigFloat& t) { return f(BigComplex(sigma, t)); };
  QuadratureResult r = integrate(g, t0, t1, tol, max_evaluations);
  r.value = BigComplex(-r.value.im, r.value.re);  // times i
  return r;
}

}  // namespace lsharp
