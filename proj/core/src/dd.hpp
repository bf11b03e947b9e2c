#pragma once

#include <cmath>

// Minimal double-double arithmetic (error-free transformations via FMA).
// Used where the discriminant polynomials cancel catastrophically; keeps
// their value accurate to ~1 ulp of the true result instead of ~1 ulp of
// the largest intermediate term.

namespace qp::detail {

struct dd {
  double hi = 0.0;
  double lo = 0.0;
};

inline dd two_sum(double a, double b) {
  double s = a + b;
  double v = s - a;
  double e = (a - (s - v)) + (b - v);
  return {s, e};
}

inline dd quick_two_sum(double a, double b) {  // requires |a| >= |b|
  double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline dd dd_add(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  return quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}

inline dd dd_add(dd a, double b) { return dd_add(a, dd{b, 0.0}); }

inline dd dd_neg(dd a) { return {-a.hi, -a.lo}; }

inline dd dd_sub(dd a, dd b) { return dd_add(a, dd_neg(b)); }

inline dd dd_mul(dd a, dd b) {
  dd p = two_prod(a.hi, b.hi);
  return quick_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

inline dd dd_mul(dd a, double b) {
  dd p = two_prod(a.hi, b);
  return quick_two_sum(p.hi, p.lo + a.lo * b);
}

// sqrt(a) for a >= 0, one refinement step on the double estimate.
inline dd dd_sqrt(dd a) {
  if (a.hi <= 0.0) return {0.0, 0.0};
  double x = std::sqrt(a.hi);
  dd e = dd_sub(a, two_prod(x, x));
  return quick_two_sum(x, (e.hi + e.lo) / (2.0 * x));
}

inline double value(dd a) { return a.hi + a.lo; }

}  // namespace qp::detail
