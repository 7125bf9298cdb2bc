#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "xell/symbolic.hpp"
#include "xell/systems.hpp"

using namespace xell;
using Q = Rational;
using P = Poly<Rational>;

namespace {

const SystemKind kAllKinds[] = {SystemKind::RadialOscillator, SystemKind::TrigDPT,
                                SystemKind::HypDPT};

P eta_poly(std::initializer_list<Q> cs) { return P(std::vector<Q>(cs), kEta); }

// Admissible draws; hyp draws leave room for ell + n <= 11.
Params random_params(std::mt19937& rng, SystemKind kind) {
  std::uniform_int_distribution<int> num(1, 40);
  std::uniform_int_distribution<int> den(1, 6);
  const Q g(num(rng), den(rng));
  Q h = g + Q(num(rng), den(rng));
  if (kind == SystemKind::HypDPT) h = g + Q(26) + Q(num(rng), den(rng));
  return {g, h};
}

int roots_in_domain(SystemKind kind, const P& p) {
  const auto d = eta_domain(kind);
  return sturm_count_roots(p, d.lo, d.hi);
}

}  // namespace

TEST(MakeSystem, Examples) {
  const auto s = make_system(SystemKind::RadialOscillator, 2, {Q(1), Q(0)});
  EXPECT_EQ(s.delta, std::make_pair(1, 0));
  EXPECT_EQ(s.deta_sq, eta_poly({0, 4}));
  EXPECT_EQ(s.dw0, eta_poly({2, -2}));
  EXPECT_EQ(s.tilde_energy, Q(-8));
  EXPECT_EQ(s.eta_second, eta_poly({2}));
  EXPECT_FALSE(s.bound_states.has_value());

  EXPECT_EQ(make_system(SystemKind::HypDPT, 1, {Q(1), Q(10)}).bound_states, 4L);
  EXPECT_THROW(make_system(SystemKind::TrigDPT, 1, {Q(1), Q(1, 2)}), ConstraintViolation);
}

TEST(MakeSystem, ConstraintDiagnostics) {
  try {
    make_system(SystemKind::TrigDPT, 1, {Q(1), Q(1, 2)});
    FAIL();
  } catch (const ConstraintViolation& e) {
    EXPECT_NE(std::string(e.what()).find("h > g"), std::string::npos);
  }
  EXPECT_THROW(make_system(SystemKind::RadialOscillator, 0, {Q(0), Q(0)}), ConstraintViolation);
  EXPECT_THROW(make_system(SystemKind::HypDPT, 4, {Q(1), Q(10)}), ConstraintViolation);
  EXPECT_NO_THROW(make_system(SystemKind::HypDPT, 3, {Q(1), Q(10)}));
}

TEST(BoundStates, StrictlyBelowReading) {
  EXPECT_EQ(bound_state_count(SystemKind::HypDPT, {Q(1), Q(9)}), 3L);   // (h-g)/2 = 4
  EXPECT_EQ(bound_state_count(SystemKind::HypDPT, {Q(1), Q(10)}), 4L);  // 4.5
  EXPECT_EQ(bound_state_count(SystemKind::HypDPT, {Q(1), Q(3, 2)}), 0L);
}

TEST(Tables, SecondDerivativeOfEta) {
  EXPECT_EQ(eta_second<Q>(SystemKind::TrigDPT), eta_poly({0, -4}));
  EXPECT_EQ(eta_second<Q>(SystemKind::HypDPT), eta_poly({0, 4}));
}

TEST(Tables, AgreeWithFloatDerivatives) {
  // eta' w0' and (eta')^2 tables against direct differentiation in x
  const Params p{Q(3, 2), Q(7, 2)};
  const auto dp = to_double(p);
  for (auto kind : kAllKinds)
    for (double x : {0.3, 0.7, 1.2}) {
      if (!strictly_inside(kind, x)) continue;
      const Jet eta = sinusoidal_coordinate(kind, x);
      const Jet w0 = prepotential_jet(kind, dp, x);
      const double tol = 1e-12 * (1 + std::fabs(eta.value) * 10);
      EXPECT_NEAR(evaluate(dw0_eta(kind, p), eta.value), eta.d1 * w0.d1, tol * 10);
      EXPECT_NEAR(evaluate(deta_sq<Q>(kind), eta.value), eta.d1 * eta.d1, tol * 10);
      EXPECT_NEAR(evaluate(eta_second<Q>(kind), eta.value), eta.d2, tol * 10);
    }
}

TEST(Energy, Examples) {
  EXPECT_EQ(energy_level(SystemKind::RadialOscillator, {Q(1), Q(0)}, 3), Q(12));
  EXPECT_EQ(energy_level(SystemKind::TrigDPT, {Q(1), Q(2)}, 1), Q(16));
  EXPECT_EQ(energy_level(SystemKind::HypDPT, {Q(1), Q(10)}, 2), Q(56));
  EXPECT_EQ(energy_level(SystemKind::TrigDPT, {Q(1), Q(2)}, 0), Q(0));
}

TEST(Energy, TelescopedSumRandomized) {
  std::mt19937 rng(5);
  for (auto kind : kAllKinds)
    for (int trial = 0; trial < 5; ++trial) {
      const auto p = random_params(rng, kind);
      for (int n = 0; n <= 50; ++n) EXPECT_NO_THROW(energy_level(kind, p, n));
    }
}

TEST(Xi, Examples) {
  const auto g = sym::symbol("g");
  const auto one = lift<sym::Univariate>(1);
  const auto half = lift<sym::Univariate>(Q(1, 2));
  const BasicParams<sym::Univariate> sp{g, g + one};
  using X = Poly<sym::Univariate>;
  EXPECT_EQ(xi_poly(SystemKind::RadialOscillator, 1, sp), X({g + half, one}, kEta));

  const Params p{Q(1), Q(2)};
  for (auto kind : kAllKinds) EXPECT_EQ(xi_poly(kind, 0, p), P::constant(1));
  // -[(g+1/2) + (h-g)(1-eta)/2] at g=1, h=2
  EXPECT_EQ(xi_poly(SystemKind::TrigDPT, 1, p), -eta_poly({Q(3, 2) + Q(1, 2), Q(-1, 2)}));
}

TEST(Xi, TrigSymbolicDegreeOne) {
  const auto g = sym::outer_symbol("g");
  const auto h = sym::inner_symbol("g", "h");
  using S = sym::Bivariate;
  const auto half = lift<S>(Q(1, 2));
  using X = Poly<S>;
  const X expected = -(X::constant(g + half, kEta) +
                       X({half, -half}, kEta) * (h - g));
  EXPECT_EQ(xi_poly(SystemKind::TrigDPT, 1, BasicParams<S>{g, h}), expected);
}

TEST(XiOde, Examples) {
  EXPECT_TRUE(xi_ode_residual(SystemKind::TrigDPT, 0, Params{Q(1), Q(2)}).is_zero());
  const auto g = sym::symbol("g");
  const BasicParams<sym::Univariate> sp{g, g};
  EXPECT_TRUE(xi_ode_residual(SystemKind::RadialOscillator, 1, sp).is_zero());
  EXPECT_EQ(tilde_energy(SystemKind::RadialOscillator, sp, 1), lift<sym::Univariate>(-4));
  const Params p{Q(1), Q(3)};
  EXPECT_TRUE(xi_ode_residual(SystemKind::TrigDPT, 2, p).is_zero());
  EXPECT_EQ(tilde_energy(SystemKind::TrigDPT, p, 2), energy(SystemKind::TrigDPT, Params{Q(-3), Q(4)}, 2));
}

TEST(XiOde, SymbolicUpToSix) {
  const auto g = sym::outer_symbol("g");
  const auto h = sym::inner_symbol("g", "h");
  const BasicParams<sym::Bivariate> sp{g, h};
  for (auto kind : kAllKinds)
    for (int ell = 0; ell <= 6; ++ell) EXPECT_TRUE(xi_ode_residual(kind, ell, sp).is_zero()) << ell;
}

TEST(Positivity, Examples) {
  const auto radial = xi_positivity_certificate(SystemKind::RadialOscillator, 2, {Q(1), Q(0)});
  const std::vector<Q> expected_radial{Q(5, 2) * Q(7, 2) / Q(2), Q(7, 2), Q(1, 2)};
  EXPECT_EQ(radial.coefficients, expected_radial);
  const auto trig = xi_positivity_certificate(SystemKind::TrigDPT, 1, {Q(1), Q(2)});
  EXPECT_EQ(trig.coefficients, (std::vector<Q>{Q(3, 2), Q(1)}));
  EXPECT_EQ(trig.sign, -1);
  for (auto kind : kAllKinds) {
    const auto c = xi_positivity_certificate(kind, 0, {Q(1), Q(10)});
    EXPECT_EQ(c.coefficients, std::vector<Q>{Q(1)});
  }
}

TEST(Positivity, RandomDrawsAndNoRootsInDomain) {
  std::mt19937 rng(19);
  for (auto kind : kAllKinds)
    for (int trial = 0; trial < 10; ++trial) {
      const auto p = random_params(rng, kind);
      for (int ell = 0; ell <= 6; ++ell) {
        ASSERT_NO_THROW(xi_positivity_certificate(kind, ell, p)) << to_string(kind) << ell;
        EXPECT_EQ(roots_in_domain(kind, xi_poly(kind, ell, p)), 0);
      }
    }
}

TEST(Xell, Examples) {
  const auto p10 = xell_poly(SystemKind::RadialOscillator, 1, 0, {Q(1), Q(0)});
  EXPECT_EQ(p10.poly, eta_poly({Q(5, 2), 1}));
  for (auto kind : kAllKinds) {
    const auto x = xell_poly(kind, 1, 0, {Q(1), Q(10)});
    EXPECT_EQ(*x.poly.degree(), 1u);
    EXPECT_EQ(roots_in_domain(kind, x.poly), 0);
  }
  const auto t = xell_poly(SystemKind::TrigDPT, 1, 1, {Q(1), Q(2)});
  EXPECT_EQ(*t.poly.degree(), 2u);
  EXPECT_EQ(roots_in_domain(SystemKind::TrigDPT, t.poly), 1);
  EXPECT_EQ(xell_poly(SystemKind::TrigDPT, 0, 3, {Q(1), Q(2)}).poly,
            classical_eigenpoly(SystemKind::TrigDPT, 3, Params{Q(1), Q(2)}));
}

TEST(Xell, VanishingDenominatorNamesFactor) {
  // -g+h+2l-2 vanishes at l=1, h=g.  Not admissible, but xell_poly itself
  // does not check admissibility, so the guard fires.
  try {
    xell_poly(SystemKind::TrigDPT, 1, 1, {Q(1), Q(1)});
    FAIL();
  } catch (const ConstraintViolation& e) {
    EXPECT_NE(std::string(e.what()).find("(-g+h+2l-2)"), std::string::npos) << e.what();
  }
}

TEST(Xell, DegreeAndOscillation) {
  std::mt19937 rng(23);
  for (auto kind : kAllKinds)
    for (int trial = 0; trial < 2; ++trial) {
      const auto p = random_params(rng, kind);
      for (int ell = 0; ell <= 3; ++ell)
        for (int n = 0; n <= 8; ++n) {
          const auto x = xell_poly(kind, ell, n, p);
          ASSERT_EQ(*x.poly.degree(), static_cast<std::size_t>(ell + n));
          EXPECT_EQ(roots_in_domain(kind, x.poly), n) << to_string(kind) << " " << ell << " " << n;
        }
    }
}

TEST(Rodrigues, Examples) {
  EXPECT_EQ(rodrigues_polynomial(SystemKind::TrigDPT, 0, {Q(1), Q(2)}), P::constant(1));
  const auto r1 = rodrigues_polynomial(SystemKind::RadialOscillator, 1, {Q(1), Q(0)});
  EXPECT_TRUE(collinearity_ratio(r1, laguerre_poly(1, Q(1, 2), kEta)).has_value());
  const auto r2 = rodrigues_polynomial(SystemKind::TrigDPT, 2, {Q(1), Q(2)});
  EXPECT_TRUE(collinearity_ratio(r2, jacobi_poly(2, Q(1, 2), Q(3, 2), kEta)).has_value());
}

TEST(Rodrigues, CollinearUpToFive) {
  std::mt19937 rng(29);
  for (auto kind : kAllKinds) {
    const auto p = random_params(rng, kind);
    for (int n = 0; n <= 5; ++n) {
      const auto r = rodrigues_polynomial(kind, n, p);
      EXPECT_TRUE(collinearity_ratio(r, classical_eigenpoly(kind, n, p)).has_value())
          << to_string(kind) << " " << n;
    }
  }
}

TEST(Potential, Examples) {
  EXPECT_NEAR(deformed_potential(SystemKind::RadialOscillator, 0, {Q(1), Q(0)}, 1.0), -2.0, 1e-14);
  EXPECT_THROW(deformed_potential(SystemKind::TrigDPT, 1, {Q(1), Q(2)}, 2.0), std::domain_error);
  const Params p{Q(1), Q(0)};
  const double d20 = deformed_potential(SystemKind::RadialOscillator, 1, p, 20.0) - 400.0;
  const double d40 = deformed_potential(SystemKind::RadialOscillator, 1, p, 40.0) - 1600.0;
  EXPECT_LT(std::fabs(d20), 20.0);
  EXPECT_LT(std::fabs(d40), 20.0);
}

TEST(Potential, ScalingInvariance) {
  const XiScaling s{Q(7, 3), Q(7, 3)};
  const XiScaling s2{Q(5, 11), Q(13, 2)};
  for (auto kind : kAllKinds) {
    const Params p{Q(1), Q(10)};
    for (double x : {0.2, 0.5, 1.1}) {
      const double u = deformed_potential(kind, 2, p, x);
      EXPECT_NEAR(deformed_potential(kind, 2, p, x, s), u, 1e-12 * (1 + std::fabs(u)));
      EXPECT_NEAR(deformed_potential(kind, 2, p, x, s2), u, 1e-12 * (1 + std::fabs(u)));
    }
  }
}

TEST(EigenfunctionResidual, Examples) {
  EXPECT_LT(eigenfunction_residual(SystemKind::RadialOscillator, 1, 0, {Q(1), Q(0)}, 0.9), 1e-8);
  EXPECT_LT(eigenfunction_residual(SystemKind::TrigDPT, 2, 3, {Q(1), Q(2)}, 0.6), 1e-8);
  EXPECT_LT(eigenfunction_residual(SystemKind::HypDPT, 0, 0, {Q(1), Q(10)}, 0.6), 1e-14);
  EXPECT_LT(eigenfunction_residual(SystemKind::HypDPT, 2, 2, {Q(1), Q(20)}, 0.4), 1e-8);
  EXPECT_THROW(eigenfunction_residual(SystemKind::RadialOscillator, 1, 0, {Q(1), Q(0)}, -1.0),
               std::domain_error);
}
