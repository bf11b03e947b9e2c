#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qp/quartic.hpp"

// Gram-Charlier densities f(z) = P(z) phi(z) with
//   P(z) = 1 + eta3 He3(z) + eta4 He4(z)
//        = eta4 z^4 + eta3 z^3 - 6 eta4 z^2 - 3 eta3 z + 3 eta4 + 1,
// He3, He4 the probabilist's Hermite polynomials and phi the standard normal
// density.  f is a genuine density iff P > 0 on all of R; for eta4 > 0 this
// is the quartic positivity problem for the reduction of P / eta4, and the
// valid (eta3, eta4) region is { 0 < eta4 < 1/6, m- < 0, D(m-) < 0 }
// together with the exact point (0, 0).

namespace qp::gc {

struct DegenerateEta4Error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadEta4Error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadGridError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GCParams {
  double eta3, eta4;
};

enum class Region { Inside, Outside, Boundary };

// Membership verdict plus the deciding trace; m_minus / d_m_minus are set
// whenever eta4 > 0 and the stationary points exist.
struct RegionSample {
  GCParams params;
  Region verdict;
  std::optional<double> m_minus;
  std::optional<double> d_m_minus;
};

struct BoundaryPoint {
  double eta4;
  double eta3_max;
};
using BoundaryCurve = std::vector<BoundaryPoint>;

// P(z), Horner form.
double hermite_p(double z, const GCParams& g);

// P(z) * phi(z).
double gc_density(double z, const GCParams& g);

// Reduction of P / eta4:
//   p = -3 (eta3^2 + 16 eta4^2) / (8 eta4^2)
//   q = eta3^3 / (8 eta4^3)
//   r = -(3 eta3^4 - 96 eta3^2 eta4^2 - 768 eta4^4 - 256 eta4^3)
//        / (256 eta4^4)
// Throws DegenerateEta4Error when eta4 == 0.
ReducedQuartic gc_to_reduced(const GCParams& g);

// The discriminant quadruple written directly in (eta3, eta4); must agree
// with discriminants(gc_to_reduced(g)).  Throws DegenerateEta4Error.
DiscriminantSet gc_c4_quantities(const GCParams& g);

// Valid-region membership.  (0, 0) is Inside exactly; eta4 == 0 with
// eta3 != 0 and all eta4 < 0 or eta4 >= 1/6 are Outside; in 0 < eta4 < 1/6
// the verdict follows m- < 0 and D(m-) < 0 under the quartic boundary band
// (Band -> Boundary).
RegionSample gc_in_region(const GCParams& g);

// Largest non-negative eta3 still inside the region at this eta4, located by
// bisection over [0, 1] to |bracket| <= tol (at most 200 halvings).  The
// negative boundary is -eta3_max by symmetry.  Throws BadEta4Error unless
// 0 < eta4 < 1/6 (or if eta4 sits so close to 1/6 that even eta3 = 0 is no
// longer crisply Inside).
double gc_boundary(double eta4, double tol);

// Row-major lattice of gc_in_region verdicts: eta3 varies across rows (ny
// values), eta4 across columns (nx values); sample order is
// (eta3_0, eta4_0), (eta3_0, eta4_1), ...  Lattice endpoints are exact and
// interior nodes are generated symmetrically, so mirrored ranges produce
// exactly mirrored parameter values.  Throws BadGridError for nx or ny < 2
// or non-finite/reversed ranges.
std::vector<RegionSample> region_grid(double eta4_min, double eta4_max,
                                      double eta3_min, double eta3_max,
                                      int nx, int ny);

// Integral of gc_density over [-12, 12] (composite Simpson, 4800 panels).
// Hermite orthogonality makes this 1 for every parameter pair, inside the
// valid region or not.
double gc_normalization(const GCParams& g);

}  // namespace qp::gc
