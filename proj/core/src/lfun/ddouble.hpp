#pragma once

// Double-double arithmetic (value = hi + lo, |lo| ≤ ulp(hi)/2), enough for
// the ≈31-digit twist sums. Requires IEEE doubles with fused multiply-add.

#include <cmath>

namespace lsharp::dd {

struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  DD t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD neg(DD a) { return {-a.hi, -a.lo}; }
inline DD sub(DD a, DD b) { return add(a, neg(b)); }

inline DD mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DD mul(DD a, double b) {
  DD p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline DD sqrt(double x) {
  if (x <= 0.0) return {};
  const double r = std::sqrt(x);
  const DD rr = two_prod(r, r);
  // one Newton step on the residual
  const double corr = ((x - rr.hi) - rr.lo) / (2.0 * r);
  return quick_two_sum(r, corr);
}

inline DD floor(DD a) {
  double hi = std::floor(a.hi);
  double lo = 0.0;
  if (hi == a.hi) lo = std::floor(a.lo);
  return quick_two_sum(hi, lo);
}

struct CDD {
  DD re;
  DD im;
};

inline CDD cadd(CDD a, CDD b) { return {add(a.re, b.re), add(a.im, b.im)}; }
inline CDD cmul(CDD a, CDD b) {
  return {sub(mul(a.re, b.re), mul(a.im, b.im)), add(mul(a.re, b.im), mul(a.im, b.re))};
}
inline CDD cscale(CDD a, DD s) { return {mul(a.re, s), mul(a.im, s)}; }

}  // namespace lsharp::dd
