#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "xell/identities.hpp"

using namespace xell;
using Q = Rational;
using P = Poly<Rational>;

namespace {

const SystemKind kAllKinds[] = {SystemKind::RadialOscillator, SystemKind::TrigDPT,
                                SystemKind::HypDPT};
const LemmaId kLemmas[] = {LemmaId::A, LemmaId::B, LemmaId::C, LemmaId::D};

}  // namespace

TEST(Lemma, Examples) {
  EXPECT_TRUE(lemma_residual(LemmaId::A, 0, Q(3, 7), Q(0)).is_zero());
  EXPECT_TRUE(lemma_holds_symbolically(LemmaId::A, 1));
  EXPECT_TRUE(lemma_holds_symbolically(LemmaId::C, 2));
}

TEST(Lemma, SymbolicUpToThirty) {
  for (auto id : kLemmas)
    for (int n = 0; n <= 30; ++n) EXPECT_TRUE(lemma_holds_symbolically(id, n)) << to_string(id) << n;
}

TEST(Lemma, JacobiLemmasAgreeInBothCoordinates) {
  const auto a = sym::outer_symbol("alpha");
  const auto b = sym::inner_symbol("alpha", "beta");
  for (auto id : {LemmaId::C, LemmaId::D})
    for (int n = 0; n <= 10; ++n) {
      EXPECT_TRUE(lemma_holds_symbolically(id, n, true)) << to_string(id) << n;
      // P(x) = Q((1-x)/2): the x expansion is the y expansion composed with the affine map
      const auto y = jacobi_poly_in_y(n, a - lift<sym::Bivariate>(1), b);
      const auto half = lift<sym::Bivariate>(Q(1, 2));
      EXPECT_EQ(substitute_affine(y, -half, half).renamed("x"),
                jacobi_poly(n, a - lift<sym::Bivariate>(1), b));
    }
}

TEST(Lemma, WrongSignIsDetected) {
  // flipping the sign of one summand of Lemma A leaves 2 L_{n-1}^{(alpha)}
  const auto a = sym::symbol("alpha");
  const auto bad = laguerre_poly(3, a - lift<sym::Univariate>(1)) - laguerre_poly(2, a) -
                   laguerre_poly(3, a);
  EXPECT_FALSE(bad.is_zero());
}

TEST(CubicLaguerre, Examples) {
  EXPECT_TRUE(cubic_laguerre_residual(0, sym::symbol("alpha")).is_zero());
  EXPECT_TRUE(cubic_laguerre_symbolic(1).is_zero);
  EXPECT_TRUE(cubic_laguerre_residual(5, Q(7, 3)).is_zero());
}

TEST(CubicLaguerre, SymbolicUpToTen) {
  for (int ell = 0; ell <= 10; ++ell) {
    const auto r = cubic_laguerre_symbolic(ell);
    EXPECT_TRUE(r.is_zero) << ell << ": " << r.residual;
    EXPECT_EQ(r.degree_bound, 3 * ell);
  }
}

TEST(CubicLaguerre, TermsAreIndividuallyNonzero) {
  const auto terms = cubic_laguerre_terms(3, sym::symbol("alpha"));
  for (const auto& t : terms) EXPECT_GE(*t.degree(), 8u);  // 3 ell, or 3 ell - 1 for the alpha prefactor
  // dropping any single summand breaks the identity
  for (std::size_t skip = 0; skip < 5; ++skip) {
    Poly<sym::Univariate> partial;
    for (std::size_t j = 0; j < 5; ++j)
      if (j != skip) partial = partial + terms[j];
    EXPECT_FALSE(partial.is_zero());
  }
}

TEST(CubicJacobi, Examples) {
  const auto a = sym::outer_symbol("alpha");
  const auto b = sym::inner_symbol("alpha", "beta");
  EXPECT_TRUE(cubic_jacobi_residual(0, a, b).is_zero());
  EXPECT_TRUE(cubic_jacobi_residual(1, a, b).is_zero());
  EXPECT_TRUE(cubic_jacobi_residual(4, Q(-13, 2), Q(9, 2)).is_zero());
  EXPECT_TRUE(cubic_jacobi_residual(4, Q(-13, 2), Q(11, 2)).is_zero());
}

TEST(CubicJacobi, SymbolicUpToFive) {
  for (int ell = 0; ell <= 5; ++ell) {
    const auto r = cubic_jacobi_symbolic(ell);
    EXPECT_TRUE(r.is_zero) << ell << ": " << r.residual;
  }
}

TEST(CubicGrid, AgreesWithSymbolic) {
  for (int ell = 0; ell <= 4; ++ell) {
    const auto l = cubic_laguerre_grid(ell);
    EXPECT_TRUE(l.is_zero) << l.residual;
    EXPECT_EQ(l.evaluations, 3 * ell + 3);
  }
  for (int ell = 0; ell <= 2; ++ell) {
    const auto j = cubic_jacobi_grid(ell);
    EXPECT_TRUE(j.is_zero) << j.residual;
    EXPECT_EQ(j.evaluations, (3 * ell + 4) * (3 * ell + 4));
  }
}

TEST(Limit, Examples) {
  const auto c = laguerre_limit_of_jacobi_identity(1, {Q(10000), Q(20000)});
  EXPECT_TRUE(c.jacobi_residual_zero);
  EXPECT_LT(c.gaps[0][0], 1e-2);
  const double ratio = c.gaps[0][2] / c.gaps[1][2];
  EXPECT_GE(ratio, 1.8);
  EXPECT_LE(ratio, 2.2);
}

TEST(Limit, AllTermsConvergeAtFirstOrder) {
  for (int ell = 1; ell <= 3; ++ell) {
    const auto c = laguerre_limit_of_jacobi_identity(ell, {Q(1000), Q(2000), Q(4000)});
    EXPECT_TRUE(c.jacobi_residual_zero);
    for (std::size_t j = 0; j < 5; ++j) {
      EXPECT_GT(c.gaps[0][j], 0.0);
      EXPECT_NEAR(c.gaps[0][j] / c.gaps[1][j], 2.0, 0.2) << ell << " " << j;
      EXPECT_NEAR(c.gaps[1][j] / c.gaps[2][j], 2.0, 0.2) << ell << " " << j;
    }
  }
}

TEST(ShapeInvariance, Examples) {
  EXPECT_TRUE(shape_invariance_residual(SystemKind::RadialOscillator, 1, {Q(1), Q(0)}).is_zero());
  EXPECT_TRUE(shape_invariance_residual(SystemKind::TrigDPT, 2, {Q(1), Q(3, 2)}).is_zero());
  EXPECT_TRUE(shape_invariance_residual(SystemKind::HypDPT, 1, {Q(1), Q(23, 2)}).is_zero());
  EXPECT_THROW(shape_invariance_residual(SystemKind::HypDPT, 5, {Q(1), Q(23, 2)}), ConstraintViolation);
}

TEST(ShapeInvariance, RandomDraws) {
  for (auto kind : kAllKinds)
    for (int ell = 1; ell <= 6; ++ell)
      for (const auto& p : admissible_draws(kind, ell, 5, 100 + ell))
        EXPECT_TRUE(shape_invariance_residual(kind, ell, p).is_zero())
            << to_string(kind) << " " << ell << " g=" << p.g << " h=" << p.h;
}

TEST(ShapeInvariance, SymbolicParameters) {
  const auto g = sym::outer_symbol("g");
  const auto h = sym::inner_symbol("g", "h");
  for (auto kind : kAllKinds)
    for (int ell = 1; ell <= 3; ++ell)
      EXPECT_TRUE(shape_invariance_residual_generic(kind, ell, BasicParams<sym::Bivariate>{g, h}).is_zero());
}

TEST(ShapeInvariance, WrongEnergyIsDetected) {
  // replacing the shifted energy by a wrong one must show up as a nonzero
  // polynomial: the residual is linear in the tilde-energy gap term
  const Params p{Q(1), Q(3)};
  const auto xi0 = xi_poly(SystemKind::TrigDPT, 2, p);
  const auto extra = xi0 * xi_poly(SystemKind::TrigDPT, 2, shifted(SystemKind::TrigDPT, p, 1)) *
                     xi_poly(SystemKind::TrigDPT, 2, shifted(SystemKind::TrigDPT, p, 2));
  const auto res = shape_invariance_residual(SystemKind::TrigDPT, 2, p) + extra;
  EXPECT_FALSE(res.is_zero());
}

TEST(ShapeStructure, RadialMatchesCubicLaguerre) {
  const auto a = sym::symbol("alpha");
  for (int ell = 1; ell <= 4; ++ell) {
    const auto g = a - lift<sym::Univariate>(Q(ell)) + lift<sym::Univariate>(Q(1, 2));
    const auto s = shape_invariance_structure(SystemKind::RadialOscillator, ell,
                                              BasicParams<sym::Univariate>{g, g});
    EXPECT_TRUE(s.triple_coefficient.is_zero());
    const auto expected = laguerre_prefactors(a);
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(s.prefactors[j], expected[j]) << ell << " " << j;
  }
}

TEST(ShapeStructure, TrigAndHypReduceToTheSameJacobiIdentity) {
  using S = sym::Bivariate;
  const auto a = sym::outer_symbol("alpha");
  const auto b = sym::inner_symbol("alpha", "beta");
  for (int ell = 1; ell <= 4; ++ell) {
    const S l = lift<S>(Q(ell));
    const S g = -a - l - lift<S>(Q(1, 2));
    const S h_trig = b - l + lift<S>(Q(3, 2));
    const S h_hyp = -b + l - lift<S>(Q(3, 2));
    const auto trig = shape_invariance_structure(SystemKind::TrigDPT, ell, BasicParams<S>{g, h_trig});
    const auto hyp = shape_invariance_structure(SystemKind::HypDPT, ell, BasicParams<S>{g, h_hyp});
    const auto expected = jacobi_prefactors(ell, a, b);
    EXPECT_TRUE(trig.triple_coefficient.is_zero());
    EXPECT_TRUE(hyp.triple_coefficient.is_zero());
    for (std::size_t j = 0; j < 5; ++j) {
      EXPECT_EQ(trig.prefactors[j], hyp.prefactors[j]) << ell << " " << j;
      EXPECT_EQ(trig.prefactors[j], expected[j]) << ell << " " << j;
    }
  }
}

TEST(DeltaPointwise, Examples) {
  EXPECT_LT(std::fabs(delta_pointwise(SystemKind::RadialOscillator, 1, {Q(1), Q(0)}, 0.7)), 1e-9 * 5);
  const Params t{Q(5, 4), Q(5, 2)};
  EXPECT_LT(std::fabs(delta_pointwise(SystemKind::TrigDPT, 3, t, std::numbers::pi / 5)),
            1e-9 * (1 + std::fabs(energy(SystemKind::TrigDPT, shifted(SystemKind::TrigDPT, t, 3), 1).to_double())));
  for (auto kind : kAllKinds)
    EXPECT_LT(std::fabs(delta_pointwise(kind, 0, {Q(1), Q(10)}, 0.5)), 1e-10);
  EXPECT_THROW(delta_pointwise(SystemKind::TrigDPT, 1, {Q(1), Q(2)}, 0.0), std::domain_error);
}

TEST(DeltaPointwise, AgreesWithExactResidualOnDraws) {
  for (auto kind : kAllKinds)
    for (int ell = 1; ell <= 4; ++ell)
      for (const auto& p : admissible_draws(kind, ell, 2, 7 + ell)) {
        for (double x : interior_samples(kind, 20))
          EXPECT_LT(std::fabs(delta_pointwise(kind, ell, p, x)), 1e-9)
              << to_string(kind) << " " << ell << " x=" << x;
      }
}

TEST(PotentialScaling, GapBelowTolerance) {
  const XiScaling s{Q(7, 3), Q(5, 11)};
  for (auto kind : kAllKinds)
    for (int ell = 1; ell <= 4; ++ell)
      for (double x : interior_samples(kind, 20))
        EXPECT_LT(potential_scaling_gap(kind, ell, {Q(3, 2), Q(25, 2)}, s, x), 1e-12);
}

TEST(Samples, StayInside) {
  for (auto kind : kAllKinds)
    for (double x : interior_samples(kind, 20)) EXPECT_TRUE(strictly_inside(kind, x));
}
