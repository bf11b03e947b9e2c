#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qp/oracle.hpp"
#include "qp/quartic.hpp"

using namespace qp;
using doctest::Approx;

namespace {

double eval_general(const GeneralQuartic& g, double x) {
  return (((g.a * x + g.b) * x + g.c) * x + g.d) * x + g.e;
}

double eval_g(const SeparationCertificate& w, double x) {
  return (w.g_coeffs[0] * x + w.g_coeffs[1]) * x + w.g_coeffs[2];
}

double eval_h(const SeparationCertificate& w, double x) {
  const double t = x * x + w.h_shift;
  return t * t;
}

}  // namespace

TEST_CASE("reduce: depressed coefficients and shift") {
  auto [rq, shift] = reduce({1, 0, 2, 3, 4});
  CHECK(rq.p == 2.0);
  CHECK(rq.q == 3.0);
  CHECK(rq.r == 4.0);
  CHECK(shift == 0.0);

  auto [rq2, shift2] = reduce({1, 4, 6, 4, 1});  // (x+1)^4
  CHECK(rq2.p == 0.0);
  CHECK(rq2.q == 0.0);
  CHECK(rq2.r == 0.0);
  CHECK(shift2 == 1.0);

  auto [rq3, shift3] = reduce({2, 0, 4, 0, 2});
  CHECK(rq3.p == 2.0);
  CHECK(rq3.q == 0.0);
  CHECK(rq3.r == 1.0);
  CHECK(shift3 == 0.0);
}

TEST_CASE("reduce: error conditions") {
  CHECK_THROWS_AS(reduce({0, 1, 1, 1, 1}), NonPositiveLeadingError);
  CHECK_THROWS_AS(reduce({-2, 0, 0, 0, 1}), NonPositiveLeadingError);
  CHECK_THROWS_AS(reduce({1, 0, std::nan(""), 0, 1}), NonFiniteError);
  CHECK_THROWS_AS(reduce({1, 0, 0, 0, INFINITY}), NonFiniteError);
}

TEST_CASE("reduce: positivity-preserving substitution") {
  // f(x) == a * fr(x + shift) pointwise
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(-10.0, 10.0);
  std::uniform_real_distribution<double> pos(0.1, 10.0);
  for (int i = 0; i < 200; ++i) {
    GeneralQuartic g{pos(rng), coef(rng), coef(rng), coef(rng), coef(rng)};
    auto [rq, shift] = reduce(g);
    for (double x : {-3.0, -1.0, -0.25, 0.0, 0.5, 2.0}) {
      const double lhs = eval_general(g, x);
      const double rhs = g.a * eval_reduced(rq, x + shift);
      CHECK(lhs == Approx(rhs).epsilon(1e-11));
    }
  }
}

TEST_CASE("eval_reduced") {
  CHECK(eval_reduced({0, 0, 1}, 0.0) == 1.0);
  CHECK(eval_reduced({-2, 0, 1}, 1.0) == 0.0);
  CHECK(eval_reduced({-6, 0, 13}, std::sqrt(3.0)) == Approx(4.0).epsilon(1e-14));
}

TEST_CASE("d_of_m: direct resolvent values") {
  CHECK(d_of_m({0, 0, 1}, 0.0) == 0.0);
  CHECK(d_of_m({0, 0, 1}, -0.5) == Approx(-3.0).epsilon(1e-14));
  CHECK(d_of_m({-6, 0, 13}, -0.30940107675850292) == Approx(-5.06889188).epsilon(1e-8));
}

TEST_CASE("d_of_m at zero is exactly q^2") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coef(-10.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    ReducedQuartic rq{coef(rng), coef(rng), coef(rng)};
    CHECK(d_of_m(rq, 0.0) == rq.q * rq.q);
  }
}

TEST_CASE("critical_ms: stationary points of D") {
  auto c1 = critical_ms({0, 0, 1});
  REQUIRE(c1.exists);
  CHECK(c1.m_minus == Approx(-0.5773502691896258).epsilon(1e-14));
  CHECK(c1.m_plus == Approx(0.5773502691896258).epsilon(1e-14));

  auto c2 = critical_ms({-6, 0, 13});
  REQUIRE(c2.exists);
  CHECK(c2.m_minus == Approx(-0.3094010767585030).epsilon(1e-13));
  CHECK(c2.m_plus == Approx(4.3094010767585030).epsilon(1e-13));

  auto c3 = critical_ms({2, 0, 1});
  REQUIRE(c3.exists);
  CHECK(c3.m_minus == Approx(-4.0 / 3.0).epsilon(1e-15));
  CHECK(c3.m_plus == 0.0);  // exact: the degenerate branch input

  CHECK_FALSE(critical_ms({0, 0, -1}).exists);  // p^2 + 12r = -12

  auto c4 = critical_ms({0, 1, 0});  // p^2 + 12r == 0: coincident
  REQUIRE(c4.exists);
  CHECK(c4.m_minus == c4.m_plus);
}

TEST_CASE("critical_ms: roots satisfy D'(m) = 0 and order") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> coef(-10.0, 10.0);
  int seen = 0;
  for (int i = 0; i < 5000; ++i) {
    ReducedQuartic rq{coef(rng), coef(rng), coef(rng)};
    auto cp = critical_ms(rq);
    const double disc = rq.p * rq.p + 12.0 * rq.r;
    CHECK(cp.exists == (disc >= 0.0));
    if (!cp.exists) continue;
    ++seen;
    CHECK(cp.m_minus <= cp.m_plus);
    const double scale = 1.0 + std::abs(rq.p) * std::abs(rq.p) + std::abs(rq.r);
    for (double m : {cp.m_minus, cp.m_plus}) {
      const double dprime = -8.0 * (3.0 * m * m + 2.0 * rq.p * m + rq.p * rq.p / 4.0 - rq.r);
      CHECK(std::abs(dprime) <= 1e-9 * scale * (1.0 + m * m));
    }
  }
  CHECK(seen > 1000);
}

TEST_CASE("d_at_m_minus: closed form") {
  CHECK(d_at_m_minus({0, 0, 1}) == Approx(-3.0792014356780039).epsilon(1e-14));
  CHECK(d_at_m_minus({-6, 0, 13}) == Approx(-5.0688918833922585).epsilon(1e-13));
  // (2p^3 - 72pr) = -128, 2 (p^2+12r)^{3/2} = 128: D(m-) = -256/27, which
  // the direct evaluation at m- = -4/3 confirms.
  CHECK(d_at_m_minus({2, 0, 1}) == Approx(-256.0 / 27.0).epsilon(1e-14));
  CHECK(d_of_m({2, 0, 1}, -4.0 / 3.0) == Approx(-256.0 / 27.0).epsilon(1e-14));
  CHECK_THROWS_AS(d_at_m_minus({0, 0, -1}), ComplexCriticalError);
  CHECK_THROWS_AS(d_at_m_plus({0, 0, -1}), ComplexCriticalError);
}

TEST_CASE("d_at_m_minus and d_at_m_plus agree with direct evaluation") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> coef(-10.0, 10.0);
  int seen = 0;
  for (int i = 0; i < 20000; ++i) {
    ReducedQuartic rq{coef(rng), coef(rng), coef(rng)};
    auto cp = critical_ms(rq);
    if (!cp.exists) continue;
    ++seen;
    const double closed_minus = d_at_m_minus(rq);
    const double direct_minus = d_of_m(rq, cp.m_minus);
    double tol = 1e-9 * std::max({1.0, std::abs(closed_minus), std::abs(direct_minus)});
    CHECK(std::abs(closed_minus - direct_minus) <= tol);

    const double closed_plus = d_at_m_plus(rq);
    const double direct_plus = d_of_m(rq, cp.m_plus);
    tol = 1e-9 * std::max({1.0, std::abs(closed_plus), std::abs(direct_plus)});
    CHECK(std::abs(closed_plus - direct_plus) <= tol);
  }
  CHECK(seen > 5000);
}

TEST_CASE("discriminants") {
  auto d1 = discriminants({0, 0, 1});
  CHECK(d1.delta == 256.0);
  CHECK(d1.delta_d == 4.0);
  CHECK(d1.delta_p == 0.0);
  CHECK(d1.delta_q == 0.0);

  auto d2 = discriminants({-2, 0, 1});
  CHECK(d2.delta == 0.0);  // 256 - 512 + 256
  CHECK(d2.delta_d == 0.0);
  CHECK(d2.delta_p == -2.0);
  CHECK(d2.delta_q == 0.0);

  auto d3 = discriminants({2, 0, 1});
  CHECK(d3.delta == 0.0);
  CHECK(d3.delta_d == 0.0);
  CHECK(d3.delta_p == 2.0);
  CHECK(d3.delta_q == 0.0);
}

TEST_CASE("discriminant sign matches the product of critical values") {
  // Delta = -27 D(m-) D(m+) whenever the critical points exist
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> coef(-10.0, 10.0);
  for (int i = 0; i < 5000; ++i) {
    ReducedQuartic rq{coef(rng), coef(rng), coef(rng)};
    if (rq.p * rq.p + 12.0 * rq.r < 0.0) continue;
    const double delta = discriminants(rq).delta;
    const double prod = -27.0 * d_at_m_minus(rq) * d_at_m_plus(rq);
    CHECK(std::abs(delta - prod) <= 1e-9 * std::max({1.0, std::abs(delta), std::abs(prod)}));
  }
}

TEST_CASE("separation identity: f = h_m - g_m for every m") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> coef(-10.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    ReducedQuartic rq{coef(rng), coef(rng), coef(rng)};
    const double m = coef(rng);
    const double shift = rq.p / 2.0 + m;
    for (int k = 0; k <= 100; ++k) {
      const double x = -10.0 + 0.2 * k;
      const double h = (x * x + shift) * (x * x + shift);
      const double g = (2.0 * m * x - rq.q) * x + (shift * shift - rq.r);
      const double f = eval_reduced(rq, x);
      CHECK(std::abs(f - (h - g)) <= 1e-9 * std::max(1.0, std::abs(f)));
    }
  }
}

TEST_CASE("separation certificate fields satisfy their own identities") {
  for (ReducedQuartic rq : {ReducedQuartic{0, 0, 1}, {-6, 0, 13}, {1, 2, 3}}) {
    const auto w = separation_witness(rq);
    CHECK(w.m < 0.0);
    // g_max both ways: -D(m-)/(8m-) and (m+p/2)^2 - r - q^2/(8m)
    const double alt = (w.m + rq.p / 2.0) * (w.m + rq.p / 2.0) - rq.r -
                       rq.q * rq.q / (8.0 * w.m);
    CHECK(w.g_max == Approx(alt).epsilon(1e-12));
    CHECK(w.g_max < 0.0);
    // certificate really reassembles f
    for (double x = -10.0; x <= 10.0; x += 0.37) {
      const double f = eval_reduced(rq, x);
      CHECK(std::abs(f - (eval_h(w, x) - eval_g(w, x))) <=
            1e-9 * std::max(1.0, std::abs(f)));
      CHECK(eval_g(w, x) <= w.g_max * (1.0 - 1e-12) + 1e-12);
      CHECK(eval_h(w, x) >= 0.0);
    }
  }
}

TEST_CASE("verdict is scale invariant") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> coef(-10.0, 10.0);
  std::uniform_real_distribution<double> pos(0.1, 10.0);
  std::uniform_real_distribution<double> lam(0.01, 100.0);
  int tested = 0;
  for (int i = 0; i < 2000; ++i) {
    GeneralQuartic g{pos(rng), coef(rng), coef(rng), coef(rng), coef(rng)};
    const auto base = is_positive_general(g);

    // exact scaling by powers of two never re-rounds
    for (double two : {0.25, 4.0, 1024.0}) {
      GeneralQuartic s{g.a * two, g.b * two, g.c * two, g.d * two, g.e * two};
      CHECK(is_positive_general(s).verdict == base.verdict);
    }

    // arbitrary positive scaling, away from the frontier
    const auto rq = reduce(g).reduced;
    const auto gm = oracle::global_min(rq);
    if (std::abs(gm.f_min) <= 1e-6 * (1.0 + std::abs(rq.r))) continue;
    ++tested;
    const double two = lam(rng);
    GeneralQuartic s{g.a * two, g.b * two, g.c * two, g.d * two, g.e * two};
    CHECK(is_positive_general(s).verdict == base.verdict);
  }
  CHECK(tested > 1000);
}
