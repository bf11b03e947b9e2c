#include "qp/quartic.hpp"

#include <cassert>
#include <cmath>
#include <limits>

#include "dd.hpp"
#include "qp/oracle.hpp"

namespace qp {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_finite(std::initializer_list<double> vs, const char* what) {
  for (double v : vs) {
    if (!std::isfinite(v)) throw NonFiniteError(what);
  }
}

// Sign of v against the band.  An exactly-zero value is kept apart from a
// merely-small one: exact zeros come from exactly degenerate inputs and are
// decided crisply, small nonzero values are genuinely ambiguous.
enum class Sign { Negative, ExactZero, InBand, Positive };

Sign classify(double v, double band) {
  if (v == 0.0) return Sign::ExactZero;
  if (v > band) return Sign::Positive;
  if (v < -band) return Sign::Negative;
  return Sign::InBand;
}

Tri strictly_positive(Sign s) {
  switch (s) {
    case Sign::Positive: return Tri::Yes;
    case Sign::InBand: return Tri::Band;
    default: return Tri::No;
  }
}

Tri strictly_negative(Sign s) {
  switch (s) {
    case Sign::Negative: return Tri::Yes;
    case Sign::InBand: return Tri::Band;
    default: return Tri::No;
  }
}

// v >= 0, widened by the band: only a crisply negative value fails.
Tri loosely_nonnegative(Sign s) {
  return s == Sign::Negative ? Tri::No : Tri::Yes;
}

bool equals_zero(Sign s) {
  return s == Sign::ExactZero || s == Sign::InBand;
}

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::No || b == Tri::No) return Tri::No;
  if (a == Tri::Band || b == Tri::Band) return Tri::Band;
  return Tri::Yes;
}

Tri tri_or(Tri a, Tri b) {
  if (a == Tri::Yes || b == Tri::Yes) return Tri::Yes;
  if (a == Tri::Band || b == Tri::Band) return Tri::Band;
  return Tri::No;
}

// (2p^3 - 72 p r + 27 q^2) and (p^2 + 12 r) in compensated form.
detail::dd resolvent_a(const ReducedQuartic& rq) {
  using namespace detail;
  dd p2 = two_prod(rq.p, rq.p);
  dd p3 = dd_mul(p2, rq.p);
  dd pr = two_prod(rq.p, rq.r);
  dd q2 = two_prod(rq.q, rq.q);
  return dd_add(dd_add(dd_mul(p3, 2.0), dd_mul(pr, -72.0)), dd_mul(q2, 27.0));
}

detail::dd resolvent_b(const ReducedQuartic& rq) {
  using namespace detail;
  return dd_add(two_prod(rq.p, rq.p), two_prod(12.0, rq.r));
}

// D(m-) or D(m+): sign selects -+ in (A -+ 2 B^{3/2}) / 27.
double d_at_critical(const ReducedQuartic& rq, double sign) {
  using namespace detail;
  if (rq.p * rq.p + 12.0 * rq.r < 0.0)
    throw ComplexCriticalError("d_at_critical: p^2 + 12r < 0");
  dd b = resolvent_b(rq);
  if (value(b) < 0.0) b = {0.0, 0.0};
  dd b32 = dd_mul(b, dd_sqrt(b));
  dd num = dd_add(resolvent_a(rq), dd_mul(b32, 2.0 * sign));
  return value(num) / 27.0;
}

}  // namespace

Reduction reduce(const GeneralQuartic& gq) {
  require_finite({gq.a, gq.b, gq.c, gq.d, gq.e}, "reduce: non-finite coefficient");
  if (gq.a <= 0.0) throw NonPositiveLeadingError("reduce: leading coefficient must be positive");
  const double a = gq.a, b = gq.b, c = gq.c, d = gq.d, e = gq.e;
  const double a2 = a * a;
  ReducedQuartic rq{
      (8.0 * a * c - 3.0 * b * b) / (8.0 * a2),
      (b * b * b - 4.0 * a * b * c + 8.0 * a2 * d) / (8.0 * a2 * a),
      (256.0 * a2 * a * e - 64.0 * a2 * b * d + 16.0 * a * b * b * c - 3.0 * b * b * b * b) /
          (256.0 * a2 * a2)};
  return {rq, b / (4.0 * a)};
}

double eval_reduced(const ReducedQuartic& rq, double x) {
  return ((x * x + rq.p) * x + rq.q) * x + rq.r;
}

double d_of_m(const ReducedQuartic& rq, double m) {
  // -8 m^3 - 8p m^2 + (8r - 2p^2) m + q^2; at m == 0 this is exactly q^2.
  return ((-8.0 * m - 8.0 * rq.p) * m + (8.0 * rq.r - 2.0 * rq.p * rq.p)) * m + rq.q * rq.q;
}

CriticalPair critical_ms(const ReducedQuartic& rq) {
  const double disc = rq.p * rq.p + 12.0 * rq.r;
  if (disc < 0.0) return {kNaN, kNaN, false};
  const double s = std::sqrt(disc);
  if (s == 0.0 && rq.p == 0.0) return {0.0, 0.0, true};
  // Anchor the root that adds magnitudes, recover the other from the product
  // m- m+ = (p^2 - 4r) / 12 to avoid cancellation.
  const double anchor = -(2.0 * rq.p + std::copysign(s, rq.p)) / 6.0;
  const double other = (rq.p * rq.p - 4.0 * rq.r) / (12.0 * anchor) + 0.0;
  return anchor <= other ? CriticalPair{anchor, other, true}
                         : CriticalPair{other, anchor, true};
}

double d_at_m_minus(const ReducedQuartic& rq) { return d_at_critical(rq, -1.0); }

double d_at_m_plus(const ReducedQuartic& rq) { return d_at_critical(rq, +1.0); }

DiscriminantSet discriminants(const ReducedQuartic& rq) {
  using namespace detail;
  const double p = rq.p, q = rq.q, r = rq.r;
  dd p2 = two_prod(p, p), q2 = two_prod(q, q), r2 = two_prod(r, r);
  dd delta = dd_mul(dd_mul(dd_mul(p2, p2), r), 16.0);
  delta = dd_add(delta, dd_mul(dd_mul(dd_mul(p2, p), q2), -4.0));
  delta = dd_add(delta, dd_mul(dd_mul(p2, r2), -128.0));
  delta = dd_add(delta, dd_mul(dd_mul(two_prod(p, r), q2), 144.0));
  delta = dd_add(delta, dd_mul(dd_mul(q2, q2), -27.0));
  delta = dd_add(delta, dd_mul(dd_mul(r2, r), 256.0));
  return {value(delta), 4.0 * r - p * p, p, q};
}

double boundary_band(const ReducedQuartic& rq) {
  const double scale = rq.p * rq.p + std::abs(rq.q) + std::abs(rq.r);
  return 1e-9 * (scale > 1.0 ? scale : 1.0);
}

Tri check_c3_tristate(const ReducedQuartic& rq, double band) {
  const double disc = rq.p * rq.p + 12.0 * rq.r;
  switch (classify(disc, band)) {
    case Sign::Negative:   // no real stationary points
    case Sign::ExactZero:  // coincident stationary points
      return Tri::No;
    case Sign::InBand:
      return Tri::Band;
    case Sign::Positive:
      break;
  }
  const CriticalPair cp = critical_ms(rq);
  Tri t = tri_and(strictly_negative(classify(cp.m_minus, band)),
                  strictly_negative(classify(d_at_m_minus(rq), band)));
  return tri_and(t, loosely_nonnegative(classify(d_at_m_plus(rq), band)));
}

Tri check_c4_tristate(const ReducedQuartic& rq, double band, C4Branch& branch) {
  const DiscriminantSet ds = discriminants(rq);
  const Tri set1 =
      tri_and(strictly_positive(classify(ds.delta, band)),
              tri_or(strictly_positive(classify(ds.delta_d, band)),
                     strictly_positive(classify(ds.delta_p, band))));
  Tri set2 = Tri::No;
  if (equals_zero(classify(ds.delta_d, band)) && equals_zero(classify(ds.delta_q, band)))
    set2 = strictly_positive(classify(ds.delta_p, band));
  branch = set1 == Tri::Yes   ? C4Branch::First
           : set2 == Tri::Yes ? C4Branch::Second
                              : C4Branch::None;
  return tri_or(set1, set2);
}

Tri check_c4_tristate(const ReducedQuartic& rq, double band) {
  C4Branch branch;
  return check_c4_tristate(rq, band, branch);
}

bool check_c3(const ReducedQuartic& rq) {
  return check_c3_tristate(rq, boundary_band(rq)) == Tri::Yes;
}

bool check_c4(const ReducedQuartic& rq) {
  return check_c4_tristate(rq, boundary_band(rq)) == Tri::Yes;
}

bool check_c2(const ReducedQuartic& rq) {
  // D(m) expanded: -8 m^3 - 8p m^2 + (8r - 2p^2) m + q^2.
  const auto roots = oracle::cubic_real_roots(
      {-8.0, -8.0 * rq.p, 8.0 * rq.r - 2.0 * rq.p * rq.p, rq.q * rq.q});
  if (roots.size() < 2) return false;
  for (const auto& root : roots) {
    if (root.value < 0.0 && root.multiplicity == 1) return true;
  }
  return false;
}

namespace {

std::optional<SeparationCertificate> make_witness(const ReducedQuartic& rq) {
  const CriticalPair cp = critical_ms(rq);
  if (!cp.exists) return std::nullopt;
  const double m = cp.m_minus;
  const double dm = d_at_m_minus(rq);
  if (!(m < 0.0) || !(dm < 0.0)) return std::nullopt;
  const double shift = rq.p / 2.0 + m;
  SeparationCertificate cert{
      m, shift, {2.0 * m, -rq.q + 0.0, shift * shift - rq.r}, -dm / (8.0 * m)};
  if (!(cert.g_max < 0.0)) return std::nullopt;
  return cert;
}

ConditionTrace make_trace(const ReducedQuartic& rq, C4Branch branch) {
  ConditionTrace trace;
  trace.discriminants = discriminants(rq);
  trace.c4_branch = branch;
  const CriticalPair cp = critical_ms(rq);
  if (cp.exists) {
    trace.m_minus = cp.m_minus;
    trace.m_plus = cp.m_plus;
    trace.d_m_minus = d_at_m_minus(rq);
    trace.d_m_plus = d_at_m_plus(rq);
  } else {
    trace.m_minus = trace.m_plus = trace.d_m_minus = trace.d_m_plus = kNaN;
  }
  return trace;
}

}  // namespace

SeparationCertificate separation_witness(const ReducedQuartic& rq) {
  if (!check_c3(rq)) throw NoWitnessError("separation_witness: C3 does not hold");
  auto cert = make_witness(rq);
  if (!cert)
    throw InternalInconsistencyError("separation_witness: C3 holds but witness signs failed");
  return *cert;
}

PositivityCertificate is_positive(const ReducedQuartic& rq, double band) {
  require_finite({rq.p, rq.q, rq.r}, "is_positive: non-finite coefficient");
  const Tri c3 = check_c3_tristate(rq, band);
  C4Branch branch;
  const Tri c4 = check_c4_tristate(rq, band, branch);

  Verdict verdict;
  if (c3 == Tri::Band && c4 == Tri::Band) {
    verdict = Verdict::Boundary;
  } else if (c3 != Tri::Band && c4 != Tri::Band && c3 != c4) {
    throw InternalInconsistencyError("is_positive: C3 and C4 disagree outside the band");
  } else {
    // Theorem-level equivalence lets the crisp route decide when the other
    // is band-ambiguous.
    const Tri decided = c3 != Tri::Band ? c3 : c4;
    verdict = decided == Tri::Yes ? Verdict::Positive : Verdict::NotPositive;
  }

  PositivityCertificate cert{verdict, std::nullopt, make_trace(rq, branch)};
  if (verdict == Verdict::Positive) {
    cert.witness = make_witness(rq);
    if (!cert.witness) cert.verdict = Verdict::Boundary;  // cannot certify
  }
  return cert;
}

PositivityCertificate is_positive(const ReducedQuartic& rq) {
  return is_positive(rq, boundary_band(rq));
}

PositivityCertificate is_positive_general(const GeneralQuartic& gq) {
  require_finite({gq.a, gq.b, gq.c, gq.d, gq.e},
                 "is_positive_general: non-finite coefficient");
  if (gq.a > 0.0) return is_positive(reduce(gq).reduced);

  PositivityCertificate cert;
  cert.trace.discriminants = {kNaN, kNaN, kNaN, kNaN};
  cert.trace.m_minus = cert.trace.m_plus = kNaN;
  cert.trace.d_m_minus = cert.trace.d_m_plus = kNaN;
  if (gq.a < 0.0) {
    cert.verdict = Verdict::NotPositive;  // f -> -inf for |x| -> inf
    return cert;
  }

  cert.trace.degenerate = true;
  const auto gm = oracle::min_of_cubic_or_lower({gq.b, gq.c, gq.d, gq.e});
  if (!gm) {
    cert.verdict = Verdict::NotPositive;  // unbounded below
    return cert;
  }
  const double scale = std::abs(gq.b) + std::abs(gq.c) + std::abs(gq.d) + std::abs(gq.e);
  switch (classify(gm->f_min, 1e-9 * (scale > 1.0 ? scale : 1.0))) {
    case Sign::Positive: cert.verdict = Verdict::Positive; break;
    case Sign::InBand: cert.verdict = Verdict::Boundary; break;
    default: cert.verdict = Verdict::NotPositive; break;
  }
  return cert;
}

}  // namespace qp
