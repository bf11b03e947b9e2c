#pragma once

#include <optional>
#include <vector>

#include "qp/quartic.hpp"

// Brute-force ground truth, independent of the closed-form condition code:
// closed-form real roots of cubics (and lower degrees) and the global
// minimum of a reduced quartic via its stationary points.

namespace qp::oracle {

// c3 t^3 + c2 t^2 + c1 t + c0
struct CubicCoeffs {
  double c3, c2, c1, c0;
};

struct RealRoot {
  double value;
  int multiplicity;
};

struct GlobalMin {
  double x_star;
  double f_min;
};

// Two roots closer than this are merged into one cluster.
inline double multiplicity_tolerance(double root) {
  return 1e-7 * (1.0 + (root < 0 ? -root : root));
}

// All real roots, sorted ascending, with multiplicities assigned by
// clustering.  Trigonometric branch for three real roots, radical branch for
// one, explicit double/triple-root forms on the discriminant boundary; each
// root gets one guarded Newton polish.  Degenerate degrees (c3 == 0, ...)
// are handled internally; an identically-zero polynomial yields no roots.
std::vector<RealRoot> cubic_real_roots(const CubicCoeffs& c);

// Global minimum of x^4 + p x^2 + q x + r from the real roots of
// 4x^3 + 2px + q = 0.
GlobalMin global_min(const ReducedQuartic& rq);

// global_min(rq).f_min > 0
bool brute_positive(const ReducedQuartic& rq);

// Global minimum of c3 x^3 + c2 x^2 + c1 x + c0; nullopt when the polynomial
// is unbounded below (true cubics, downward parabolas, non-constant linear).
std::optional<GlobalMin> min_of_cubic_or_lower(const CubicCoeffs& c);

}  // namespace qp::oracle
