#include "qp/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace qp::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;

double eval_cubic(const CubicCoeffs& c, double t) {
  return ((c.c3 * t + c.c2) * t + c.c1) * t + c.c0;
}

double eval_cubic_deriv(const CubicCoeffs& c, double t) {
  return (3.0 * c.c3 * t + 2.0 * c.c2) * t + c.c1;
}

// One Newton step, kept only if it does not increase the residual.
double polish(const CubicCoeffs& c, double t) {
  const double d = eval_cubic_deriv(c, t);
  if (d == 0.0) return t;
  const double t2 = t - eval_cubic(c, t) / d;
  if (!std::isfinite(t2)) return t;
  return std::abs(eval_cubic(c, t2)) <= std::abs(eval_cubic(c, t)) ? t2 : t;
}

std::vector<RealRoot> cluster(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  std::vector<RealRoot> out;
  for (double v : values) {
    if (!out.empty() && v - out.back().value <= multiplicity_tolerance(v)) {
      // fold into the running cluster, keep the mean as representative
      auto& c = out.back();
      c.value += (v - c.value) / (c.multiplicity + 1);
      ++c.multiplicity;
    } else {
      out.push_back({v, 1});
    }
  }
  return out;
}

std::vector<double> quadratic_roots(double a, double b, double c) {
  if (a == 0.0) {
    if (b == 0.0) return {};  // constant: no roots reported even for c == 0
    return {-c / b};
  }
  const double disc = b * b - 4.0 * a * c;
  const double scale = b * b + std::abs(4.0 * a * c);
  if (disc < -1e-12 * scale) return {};
  if (disc <= 1e-12 * scale) {
    const double t = -b / (2.0 * a);
    return {t, t};
  }
  const double s = std::sqrt(disc);
  const double w = -(b + std::copysign(s, b)) / 2.0;
  if (w == 0.0) return {0.0, 0.0};
  return {w / a, c / w};
}

}  // namespace

std::vector<RealRoot> cubic_real_roots(const CubicCoeffs& c) {
  std::vector<double> raw;
  if (c.c3 == 0.0) {
    raw = quadratic_roots(c.c2, c.c1, c.c0);
  } else {
    // Monic form t^3 + A t^2 + B t + C, then the standard Q/R split.
    const double A = c.c2 / c.c3;
    const double B = c.c1 / c.c3;
    const double C = c.c0 / c.c3;
    const double Q = (A * A - 3.0 * B) / 9.0;
    const double R = (2.0 * A * A * A - 9.0 * A * B + 27.0 * C) / 54.0;
    const double R2 = R * R;
    const double Q3 = Q * Q * Q;
    const double scale = R2 + std::abs(Q3);
    const double sub = A / 3.0;

    if (Q3 - R2 > 1e-12 * scale) {
      // three distinct real roots
      const double theta = std::acos(std::clamp(R / std::sqrt(Q3), -1.0, 1.0));
      const double f = -2.0 * std::sqrt(Q);
      raw = {f * std::cos(theta / 3.0) - sub,
             f * std::cos((theta + 2.0 * kPi) / 3.0) - sub,
             f * std::cos((theta - 2.0 * kPi) / 3.0) - sub};
    } else if (R2 - Q3 > 1e-12 * scale) {
      // one real root
      const double w = std::cbrt(std::abs(R) + std::sqrt(R2 - Q3));
      const double a1 = R >= 0.0 ? -w : w;
      raw = {a1 + (a1 == 0.0 ? 0.0 : Q / a1) - sub};
    } else if (Q <= 1e-12 * (1.0 + A * A / 9.0 + std::abs(B) / 3.0)) {
      // R^2 == Q^3 with Q == 0: triple root
      raw = {-sub, -sub, -sub};
    } else {
      // R^2 == Q^3 with Q > 0: one single and one double root
      const double u = std::cbrt(R);  // sgn(R) * sqrt(Q)
      raw = {-2.0 * u - sub, u - sub, u - sub};
    }
  }
  for (double& t : raw) t = polish(c, t);
  return cluster(std::move(raw));
}

GlobalMin global_min(const ReducedQuartic& rq) {
  // stationary points: 4x^3 + 2p x + q = 0 (a cubic always has a real root)
  const auto stationary = cubic_real_roots({4.0, 0.0, 2.0 * rq.p, rq.q});
  GlobalMin best{stationary.front().value, eval_reduced(rq, stationary.front().value)};
  for (const auto& root : stationary) {
    const double f = eval_reduced(rq, root.value);
    if (f < best.f_min) best = {root.value, f};
  }
  return best;
}

bool brute_positive(const ReducedQuartic& rq) { return global_min(rq).f_min > 0.0; }

std::optional<GlobalMin> min_of_cubic_or_lower(const CubicCoeffs& c) {
  if (c.c3 != 0.0) return std::nullopt;  // odd leading degree
  if (c.c2 != 0.0) {
    if (c.c2 < 0.0) return std::nullopt;
    const double x = -c.c1 / (2.0 * c.c2);
    return GlobalMin{x, c.c0 - c.c1 * c.c1 / (4.0 * c.c2)};
  }
  if (c.c1 != 0.0) return std::nullopt;
  return GlobalMin{0.0, c.c0};
}

}  // namespace qp::oracle
