#pragma once

#include <array>
#include <optional>
#include <stdexcept>

// Strict-positivity decision procedure for real quartic polynomials.
//
// A depressed quartic f(x) = x^4 + p x^2 + q x + r splits, for any free
// parameter m, into
//
//   h_m(x) = (x^2 + p/2 + m)^2
//   g_m(x) = 2m x^2 - q x + (m + p/2)^2 - r
//   f(x)   = h_m(x) - g_m(x)
//
// f > 0 everywhere exactly when some m < 0 keeps g_m below zero everywhere,
// i.e. the line y = 0 separates h_m from g_m.  The discriminant of g_m,
//
//   D(m) = -8m (m^2 + p m + p^2/4 - r) + q^2,
//
// is a cubic in m whose stationary points m- < m+ decide the existence of
// such a witness: positivity holds iff m- < 0, D(m-) < 0 and D(m+) >= 0.
// Equivalently, the coefficient triple must lie in the semialgebraic set
//   { Delta > 0  and  (Delta_D > 0 or Delta_P > 0) }  or
//   { Delta_D = 0 and Delta_P > 0 and Delta_Q = 0 }
// built from the classical quartic discriminant Delta and Delta_D = 4r - p^2,
// Delta_P = p, Delta_Q = q.  is_positive() evaluates both routes, requires
// them to agree, and emits a checkable separation certificate (m-, h, g).

namespace qp {

struct NonFiniteError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonPositiveLeadingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ComplexCriticalError : std::domain_error {
  using std::domain_error::domain_error;
};
struct NoWitnessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Thrown when the two decision routes disagree outside the boundary band;
// Theorem-level equivalence makes this an implementation bug, never an input
// condition.
struct InternalInconsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

// a x^4 + b x^3 + c x^2 + d x + e
struct GeneralQuartic {
  double a, b, c, d, e;
};

// x^4 + p x^2 + q x + r
struct ReducedQuartic {
  double p, q, r;
};

// (Delta, Delta_D, Delta_P, Delta_Q); delta_p and delta_q are copies of p, q.
struct DiscriminantSet {
  double delta;
  double delta_d;
  double delta_p;
  double delta_q;
};

// Roots m- <= m+ of D'(m) = 0; exists is false iff p^2 + 12r < 0.
struct CriticalPair {
  double m_minus;
  double m_plus;
  bool exists;
};

// Witness for positivity: f = (x^2 + h_shift)^2 - g(x) with
// g(x) = g_coeffs[0] x^2 + g_coeffs[1] x + g_coeffs[2] and sup g = g_max < 0.
struct SeparationCertificate {
  double m;                        // witness parameter, m < 0 (equals m-)
  double h_shift;                  // p/2 + m
  std::array<double, 3> g_coeffs;  // { 2m, -q, (m + p/2)^2 - r }
  double g_max;                    // -D(m-) / (8 m-)
};

enum class Verdict { Positive, NotPositive, Boundary };

// Three-valued logic for band-aware condition checks.
enum class Tri { No, Yes, Band };

enum class C4Branch { None, First, Second };

// Quantities examined on the way to a verdict.  m/D entries are NaN when
// p^2 + 12r < 0.  degenerate marks general inputs with a = 0 that were
// classified by the low-degree minimum rather than the quartic conditions.
struct ConditionTrace {
  DiscriminantSet discriminants{};
  double m_minus;
  double m_plus;
  double d_m_minus;
  double d_m_plus;
  C4Branch c4_branch = C4Branch::None;
  bool degenerate = false;
};

struct PositivityCertificate {
  Verdict verdict;
  std::optional<SeparationCertificate> witness;
  ConditionTrace trace;
};

struct Reduction {
  ReducedQuartic reduced;
  double shift;  // b / (4a); the depressed variable is z = x + shift
};

// Depress a general quartic (a > 0).  Positivity of the input over R is
// equivalent to positivity of the returned reduced quartic.
// Throws NonPositiveLeadingError if a <= 0, NonFiniteError on NaN/inf input.
Reduction reduce(const GeneralQuartic& gq);

// Horner evaluation of x^4 + p x^2 + q x + r.
double eval_reduced(const ReducedQuartic& rq, double x);

// D(m) = -8m (m^2 + pm + p^2/4 - r) + q^2, nested so that D(0) == q*q exactly.
double d_of_m(const ReducedQuartic& rq, double m);

// Stationary points of D: m-+ = (-2p -+ sqrt(p^2 + 12r)) / 6.
CriticalPair critical_ms(const ReducedQuartic& rq);

// Closed forms D(m-+) = ((2p^3 - 72pr + 27q^2) -+ 2 (p^2 + 12r)^{3/2}) / 27,
// evaluated with compensated arithmetic so heavy cancellation still leaves
// the sign and ~15 digits trustworthy.  Throw ComplexCriticalError when
// p^2 + 12r < 0.
double d_at_m_minus(const ReducedQuartic& rq);
double d_at_m_plus(const ReducedQuartic& rq);

// Delta = 16p^4 r - 4p^3 q^2 - 128 p^2 r^2 + 144 p q^2 r - 27 q^4 + 256 r^3
// (compensated), Delta_D = 4r - p^2 (plain), Delta_P = p, Delta_Q = q.
DiscriminantSet discriminants(const ReducedQuartic& rq);

// Scale-aware half-width of the boundary band:
// 1e-9 * max(1, p^2 + |q| + |r|).  Strict inequalities whose operand lands
// inside the band (but is not an exact zero) yield Tri::Band.
double boundary_band(const ReducedQuartic& rq);

// Band-aware evaluation of the two decision routes.  Exactly computed zeros
// are treated as exact input degeneracies: strict tests fail crisply, loose
// and equality tests pass crisply.  band == 0 gives exact-arithmetic
// semantics.
Tri check_c3_tristate(const ReducedQuartic& rq, double band);
Tri check_c4_tristate(const ReducedQuartic& rq, double band);
Tri check_c4_tristate(const ReducedQuartic& rq, double band, C4Branch& branch);

// Boolean forms (tri-state == Yes) under the default band.
bool check_c3(const ReducedQuartic& rq);
bool check_c4(const ReducedQuartic& rq);

// The resolvent-cubic root-pattern condition: D(m) = 0 has at least two
// distinct real roots, one of them a negative single root.  Solved through
// the oracle cubic solver; kept for completeness, not on the verdict path.
bool check_c2(const ReducedQuartic& rq);

// Build the separation certificate at m = m-.  Requires check_c3;
// throws NoWitnessError otherwise.
SeparationCertificate separation_witness(const ReducedQuartic& rq);

// Full verdict.  Both condition routes run; one crisp route decides when the
// other is band-ambiguous, both ambiguous gives Boundary, and a crisp
// disagreement throws InternalInconsistencyError.
PositivityCertificate is_positive(const ReducedQuartic& rq, double band);
PositivityCertificate is_positive(const ReducedQuartic& rq);

// General quartics: a > 0 reduces and delegates; a < 0 is never positive;
// a == 0 falls back to the global minimum of the remaining low-degree
// polynomial (trace flagged degenerate).
PositivityCertificate is_positive_general(const GeneralQuartic& gq);

}  // namespace qp
