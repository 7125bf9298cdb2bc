#include <gtest/gtest.h>

#include "xell/classical.hpp"
#include "xell/symbolic.hpp"

using namespace xell;
using Q = Rational;
using P = Poly<Rational>;

namespace {

// Three-term recurrences; test-only oracle for rational parameters.
P laguerre_by_recurrence(int n, const Q& a) {
  const P x = P::variable("x");
  P prev = P::constant(1, "x");
  if (n == 0) return prev;
  P cur = P({a + 1, -1}, "x");
  for (int k = 2; k <= n; ++k) {
    P next = (P::constant(Q(2 * k - 1) + a, "x") - x) * cur - prev * (Q(k - 1) + a);
    next = next * (Q(1) / Q(k));
    prev = cur;
    cur = next;
  }
  return cur;
}

P jacobi_by_recurrence(int n, const Q& a, const Q& b) {
  const P x = P::variable("x");
  P prev = P::constant(1, "x");
  if (n == 0) return prev;
  P cur = P({(a - b) / 2, (a + b + 2) / 2}, "x");
  for (int k = 2; k <= n; ++k) {
    const Q s = Q(2 * k) + a + b;
    const Q c1 = Q(2 * k) * (Q(k) + a + b) * (s - 2);
    const Q c2 = (s - 1) * (a * a - b * b);
    const Q c3 = (s - 1) * s * (s - 2);
    const Q c4 = Q(2) * (Q(k - 1) + a) * (Q(k - 1) + b) * s;
    P next = (P::constant(c2, "x") + x * c3) * cur - prev * c4;
    prev = cur;
    cur = next * (Q(1) / c1);
  }
  return cur;
}

}  // namespace

TEST(Laguerre, Examples) {
  EXPECT_EQ(laguerre_poly(0, Q(5, 3)), P::constant(1));
  EXPECT_TRUE(laguerre_poly(-1, Q(5, 3)).is_zero());
  EXPECT_THROW(laguerre_poly(-2, Q(1)), std::invalid_argument);
  const auto a = sym::symbol("alpha");
  // (1 + alpha) - x with coefficients in Q[alpha]
  const auto one = lift<sym::Univariate>(1);
  const Poly<sym::Univariate> expected({a + one, -one}, "x");
  EXPECT_EQ(laguerre_poly(1, a), expected);
}

TEST(Laguerre, MatchesRecurrence) {
  for (const Q a : {Q(0), Q(1, 2), Q(-2, 3), Q(7, 2)})
    for (int n = 0; n <= 12; ++n) EXPECT_EQ(laguerre_poly(n, a), laguerre_by_recurrence(n, a));
}

TEST(Jacobi, Examples) {
  EXPECT_EQ(jacobi_poly(0, Q(1, 3), Q(2)), P::constant(1));
  EXPECT_TRUE(jacobi_poly(-1, Q(1, 3), Q(2)).is_zero());
  EXPECT_EQ(jacobi_poly(1, Q(0), Q(0)), P::variable("x"));
  const auto a = sym::outer_symbol("alpha");
  const auto b = sym::inner_symbol("alpha", "beta");
  const auto one = lift<sym::Bivariate>(1);
  const auto two = lift<sym::Bivariate>(2);
  using X = Poly<sym::Bivariate>;
  // (a+1) - (a+b+2)(1-x)/2
  const X one_minus_x({one, -one}, "x");
  const X expected = X::constant(a + one, "x") -
                     one_minus_x * ring_traits<sym::Bivariate>::scaled(a + b + two, Q(1, 2));
  EXPECT_EQ(jacobi_poly(1, a, b), expected);
}

TEST(Jacobi, RejectsNegativeIntegerAlphaWithinDegree) {
  EXPECT_THROW(jacobi_poly(3, Q(-2), Q(1, 2)), std::domain_error);
  EXPECT_NO_THROW(jacobi_poly(3, Q(-4), Q(1, 2)));
  EXPECT_THROW(jacobi_poly(-3, Q(1), Q(1)), std::invalid_argument);
}

TEST(Jacobi, MatchesRecurrence) {
  const std::pair<Q, Q> params[] = {{Q(0), Q(0)}, {Q(1, 2), Q(3, 2)}, {Q(-1, 3), Q(5, 7)},
                                    {Q(-13, 2), Q(11, 2)}};
  for (const auto& [a, b] : params)
    for (int n = 0; n <= 10; ++n)
      EXPECT_EQ(jacobi_poly(n, a, b), jacobi_by_recurrence(n, a, b)) << n;
}

TEST(Jacobi, ReflectionSymbolic) {
  const auto a = sym::outer_symbol("alpha");
  const auto b = sym::inner_symbol("alpha", "beta");
  const auto minus_one = lift<sym::Bivariate>(-1);
  const auto zero = lift<sym::Bivariate>(0);
  for (int n = 0; n <= 12; ++n) {
    auto lhs = substitute_affine(jacobi_poly(n, a, b), minus_one, zero);
    auto rhs = jacobi_poly(n, b, a);
    if (n % 2 == 1) rhs = -rhs;
    EXPECT_EQ(lhs, rhs) << n;
  }
}

TEST(Laguerre, DegreeAndLeadingCoefficientSymbolic) {
  const auto a = sym::symbol("alpha");
  for (int n = 0; n <= 15; ++n) {
    const auto L = laguerre_poly(n, a);
    ASSERT_EQ(*L.degree(), static_cast<std::size_t>(n));
    Q lc = Q(1) / factorial(n);
    if (n % 2 == 1) lc = -lc;
    EXPECT_EQ(L.leading(), sym::Univariate::constant(lc));
  }
}

TEST(Jacobi, LeadingCoefficientSymbolic) {
  const auto a = sym::outer_symbol("alpha");
  const auto b = sym::inner_symbol("alpha", "beta");
  for (int n = 0; n <= 12; ++n) {
    const auto J = jacobi_poly(n, a, b);
    ASSERT_EQ(*J.degree(), static_cast<std::size_t>(n));
    Q scale = Q(1) / factorial(n);
    for (int i = 0; i < n; ++i) scale /= Q(2);
    const auto expected =
        ring_traits<sym::Bivariate>::scaled(pochhammer(a + b + lift<sym::Bivariate>(n + 1), n), scale);
    EXPECT_EQ(J.leading(), expected) << n;
  }
}

TEST(ForwardShift, Examples) {
  const auto a = sym::symbol("alpha");
  EXPECT_TRUE(laguerre_forward_shift_residual(0, a).is_zero());
  EXPECT_TRUE(laguerre_forward_shift_residual(2, a).is_zero());
  EXPECT_TRUE(forward_shift_holds_symbolically(Family::Jacobi, 3));
}

TEST(ForwardShift, HoldsSymbolicallyUpToTwenty) {
  for (int n = 0; n <= 20; ++n) {
    EXPECT_TRUE(forward_shift_holds_symbolically(Family::Laguerre, n)) << n;
    EXPECT_TRUE(forward_shift_holds_symbolically(Family::Jacobi, n)) << n;
  }
}

TEST(JacobiLaguerreLimit, Examples) {
  EXPECT_EQ(jacobi_laguerre_limit_error(0, Q(1, 2), 10.0, 0.3), 0.0);

  const double e1 = jacobi_laguerre_limit_error(2, Q(1, 2), 1e6, 1.0);
  const double e2 = jacobi_laguerre_limit_error(2, Q(1, 2), 2e6, 1.0);
  EXPECT_LT(e1, 1e-4);
  EXPECT_GE(e1 / e2, 1.8);
  EXPECT_LE(e1 / e2, 2.2);

  // P_1^{(0,beta)}(1-2x/beta) = 1 - x - 2x/beta, so the error is exactly 2x/beta
  const double e3 = jacobi_laguerre_limit_error(1, Q(0), 100.0, 2.0);
  EXPECT_NEAR(e3, 0.04, 1e-15);
  EXPECT_LT(e3, 10.0 * (1 + 0 + 1) / 100.0);
}

TEST(JacobiLaguerreLimit, ConvergesAtFirstOrderForSeveralDegrees) {
  for (int n = 1; n <= 4; ++n)
    for (double x : {0.5, 1.5, 3.0}) {
      const double e1 = jacobi_laguerre_limit_error(n, Q(1, 3), 1e5, x);
      const double e2 = jacobi_laguerre_limit_error(n, Q(1, 3), 2e5, x);
      EXPECT_GT(e1, 0.0);
      EXPECT_NEAR(e1 / e2, 2.0, 0.2) << n << " " << x;
    }
}
