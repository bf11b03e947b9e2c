#include "qp/gram_charlier.hpp"

#include <cassert>
#include <cmath>

#include "dd.hpp"

namespace qp::gc {

namespace {

constexpr double kOneSixth = 1.0 / 6.0;
constexpr double kInvSqrt2Pi = 0.3989422804014327;  // 1 / sqrt(2 pi)

// Endpoint-exact, mirror-symmetric linspace node: i == 0 and i == n-1
// return the endpoints untouched; interior nodes of a sign-flipped range are
// exact negations of each other.
double grid_node(double lo, double hi, int i, int n) {
  if (i == 0) return lo;
  if (i == n - 1) return hi;
  return (lo * (n - 1 - i) + hi * i) / (n - 1);
}

}  // namespace

double hermite_p(double z, const GCParams& g) {
  // eta4 z^4 + eta3 z^3 - 6 eta4 z^2 - 3 eta3 z + 3 eta4 + 1
  return (((g.eta4 * z + g.eta3) * z - 6.0 * g.eta4) * z - 3.0 * g.eta3) * z +
         (3.0 * g.eta4 + 1.0);
}

double gc_density(double z, const GCParams& g) {
  return hermite_p(z, g) * kInvSqrt2Pi * std::exp(-0.5 * z * z);
}

ReducedQuartic gc_to_reduced(const GCParams& g) {
  if (g.eta4 == 0.0) throw DegenerateEta4Error("gc_to_reduced: eta4 == 0");
  const double e3 = g.eta3, e4 = g.eta4;
  const double e3_2 = e3 * e3, e4_2 = e4 * e4;
  const double p = -3.0 * (e3_2 + 16.0 * e4_2) / (8.0 * e4_2);
  const double q = e3 * e3_2 / (8.0 * e4 * e4_2);
  const double r = -(3.0 * e3_2 * e3_2 - 96.0 * e3_2 * e4_2 - 768.0 * e4_2 * e4_2 -
                     256.0 * e4 * e4_2) /
                   (256.0 * e4_2 * e4_2);
  return {p, q, r};
}

DiscriminantSet gc_c4_quantities(const GCParams& g) {
  using namespace detail;
  if (g.eta4 == 0.0) throw DegenerateEta4Error("gc_c4_quantities: eta4 == 0");
  const double e3 = g.eta3, e4 = g.eta4;
  const double e3_2 = e3 * e3, e3_4 = e3_2 * e3_2;
  const double e4_2 = e4 * e4, e4_3 = e4_2 * e4, e4_4 = e4_2 * e4_2;
  // the Delta numerator cancels heavily near its zero set, so it gets the
  // same compensated treatment as the general-path discriminant
  const dd a2 = two_prod(e3, e3), b2 = two_prod(e4, e4);
  const dd a4 = dd_mul(a2, a2), a6 = dd_mul(a4, a2);
  const dd b3 = dd_mul(b2, e4), b4 = dd_mul(b2, b2), b6 = dd_mul(b3, b3);
  dd num = dd_mul(a6, 108.0);
  num = dd_add(num, dd_mul(dd_mul(a4, b2), 1620.0));
  num = dd_add(num, dd_mul(dd_mul(a4, e4), 108.0));
  num = dd_add(num, dd_mul(a4, -27.0));
  num = dd_add(num, dd_mul(dd_mul(a2, b4), 10368.0));
  num = dd_add(num, dd_mul(dd_mul(a2, b2), -288.0));
  num = dd_add(num, dd_mul(b6, 27648.0));
  num = dd_add(num, dd_mul(b4, -2304.0));
  num = dd_add(num, dd_mul(b3, 256.0));
  const double delta = value(num) / value(b6);
  const double delta_d =
      (-3.0 * e3_4 - 48.0 * e3_2 * e4_2 - 384.0 * e4_4 + 64.0 * e4_3) / (16.0 * e4_4);
  const double delta_p = -3.0 * (e3_2 + 16.0 * e4_2) / (8.0 * e4_2);
  const double delta_q = e3 * e3_2 / (8.0 * e4_3);
  return {delta, delta_d, delta_p, delta_q};
}

RegionSample gc_in_region(const GCParams& g) {
  // Exact degenerate line first: eta4 == 0 is a density iff eta3 == 0
  // (the cubic part is unbounded below otherwise).
  if (g.eta4 == 0.0)
    return {g, g.eta3 == 0.0 ? Region::Inside : Region::Outside, std::nullopt, std::nullopt};
  if (g.eta4 < 0.0) return {g, Region::Outside, std::nullopt, std::nullopt};

  const ReducedQuartic rq = gc_to_reduced(g);
  const CriticalPair cp = critical_ms(rq);
  RegionSample sample{g, Region::Outside, std::nullopt, std::nullopt};
  if (!cp.exists) return sample;  // not reachable for eta4 > 0, kept defensive
  const double dm = d_at_m_minus(rq);
  sample.m_minus = cp.m_minus;
  sample.d_m_minus = dm;

  // P(+-sqrt(3)) = 1 - 6 eta4 independently of eta3, so eta4 >= 1/6 can
  // never be strictly positive; this exact comparison precedes the band
  // checks (m- is exactly 0 at the pinch point eta4 == 1/6, eta3 == 0).
  if (g.eta4 >= kOneSixth) return sample;

  const double band = boundary_band(rq);
  const auto strictly_neg = [band](double v) {
    if (v == 0.0 || v > band) return Tri::No;
    return v < -band ? Tri::Yes : Tri::Band;
  };
  const Tri m_neg = strictly_neg(cp.m_minus);
  const Tri d_neg = strictly_neg(dm);
  if (m_neg == Tri::No || d_neg == Tri::No) {
    sample.verdict = Region::Outside;
  } else if (m_neg == Tri::Band || d_neg == Tri::Band) {
    sample.verdict = Region::Boundary;
  } else {
    assert(d_at_m_plus(rq) >= -band);  // implied by m- < 0; checked in debug
    sample.verdict = Region::Inside;
  }
  return sample;
}

double gc_boundary(double eta4, double tol) {
  if (!(eta4 > 0.0) || !(eta4 < kOneSixth) || !(tol > 0.0))
    throw BadEta4Error("gc_boundary: need 0 < eta4 < 1/6 and tol > 0");
  if (gc_in_region({0.0, eta4}).verdict != Region::Inside)
    throw BadEta4Error("gc_boundary: eta3 = 0 not crisply inside at this eta4");
  double lo = 0.0;        // inside
  double hi = 1.0;        // P(1) = 1 - 2 eta3 - 2 eta4 < 0 here, outside
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    (gc_in_region({mid, eta4}).verdict == Region::Inside ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<RegionSample> region_grid(double eta4_min, double eta4_max,
                                      double eta3_min, double eta3_max,
                                      int nx, int ny) {
  if (nx < 2 || ny < 2) throw BadGridError("region_grid: nx and ny must be >= 2");
  if (!std::isfinite(eta4_min) || !std::isfinite(eta4_max) ||
      !std::isfinite(eta3_min) || !std::isfinite(eta3_max) ||
      eta4_min >= eta4_max || eta3_min >= eta3_max)
    throw BadGridError("region_grid: ranges must be finite and increasing");
  std::vector<RegionSample> samples;
  samples.reserve(static_cast<size_t>(nx) * static_cast<size_t>(ny));
  for (int iy = 0; iy < ny; ++iy) {
    const double eta3 = grid_node(eta3_min, eta3_max, iy, ny);
    for (int ix = 0; ix < nx; ++ix) {
      samples.push_back(gc_in_region({eta3, grid_node(eta4_min, eta4_max, ix, nx)}));
    }
  }
  return samples;
}

double gc_normalization(const GCParams& g) {
  // composite Simpson on [-12, 12]; the integrand decays like exp(-z^2/2)
  // so the truncated tail is far below the 1e-6 contract
  constexpr int kPanels = 4800;
  constexpr double kLo = -12.0, kHi = 12.0;
  constexpr double h = (kHi - kLo) / kPanels;
  double sum = gc_density(kLo, g) + gc_density(kHi, g);
  for (int i = 1; i < kPanels; ++i)
    sum += gc_density(kLo + i * h, g) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

}  // namespace qp::gc
