#pragma once

#include <array>
#include <string>
#include <tuple>
#include <vector>

#include "xell/classical.hpp"
#include "xell/symbolic.hpp"
#include "xell/systems.hpp"

namespace xell {

enum class LemmaId { A, B, C, D };

std::string to_string(LemmaId id);

/// LHS - RHS of the four neighbour relations.  A and B are Laguerre (beta
/// is ignored), C and D are Jacobi.  With in_y the Jacobi lemmas are expanded
/// in y = (1-x)/2 instead of x; the substitution is invertible, so either
/// residual vanishes exactly when the other does.
template <class R>
Poly<R> lemma_residual(LemmaId id, int n, const R& alpha, const R& beta, bool in_y = false) {
  const R zero = lift<R>(0), one = lift<R>(1), two = lift<R>(2), nn = lift<R>(Rational(n));
  const Poly<R> x = Poly<R>::variable("x");
  const std::string v = in_y ? "y" : "x";
  const Poly<R> one_minus_x = in_y ? Poly<R>({zero, two}, v) : Poly<R>({one, -one}, v);
  const Poly<R> one_plus_x = in_y ? Poly<R>({two, -two}, v) : Poly<R>({one, one}, v);
  auto P = [&](int m, const R& a, const R& b) {
    return in_y ? jacobi_poly_in_y(m, a, b) : jacobi_poly(m, a, b);
  };
  switch (id) {
    case LemmaId::A:
      return laguerre_poly(n, alpha - one) + laguerre_poly(n - 1, alpha) - laguerre_poly(n, alpha);
    case LemmaId::B:
      return x * laguerre_poly(n - 1, alpha + one) - laguerre_poly(n - 1, alpha) * alpha +
             laguerre_poly(n, alpha - one) * nn;
    case LemmaId::C:
      return P(n, alpha - one, beta) * (two * (alpha - one)) -
             one_minus_x * P(n - 1, alpha, beta + one) * (nn + alpha + beta) -
             P(n, alpha - two, beta + one) * (two * (nn + alpha - one));
    case LemmaId::D:
      return P(n, alpha - one, beta + one) * (two * (beta + one)) +
             one_plus_x * P(n - 1, alpha, beta + two) * (nn + alpha + beta + one) -
             P(n, alpha, beta) * (two * (nn + beta + one));
  }
  return {};
}

/// Lemma residual with symbolic parameters; true when identically zero.
/// The Jacobi lemmas are checked in the y coordinate unless in_x is set.
bool lemma_holds_symbolically(LemmaId id, int n, bool in_x = false);

// ---------------------------------------------------------------------------
// Cubic identities.  Each summand is prefactor * F1 * F2 * F3 with every
// factor a classical polynomial at a shifted degree and parameters.

struct ClassicalFactor {
  int degree_shift;  ///< degree is ell + degree_shift
  int alpha_shift;
  int beta_shift;
  bool operator==(const ClassicalFactor&) const = default;
};

using FactorTriple = std::array<ClassicalFactor, 3>;

inline constexpr std::array<FactorTriple, 5> kLaguerreFactors{{
    {{{-1, 2, 0}, {0, -1, 0}, {0, 0, 0}}},
    {{{-1, 0, 0}, {0, 1, 0}, {0, 0, 0}}},
    {{{-1, 1, 0}, {0, 1, 0}, {0, -1, 0}}},
    {{{-1, 0, 0}, {-1, 1, 0}, {0, 1, 0}}},
    {{{-1, 1, 0}, {-1, 2, 0}, {0, -1, 0}}},
}};

inline constexpr std::array<FactorTriple, 5> kJacobiFactors{{
    {{{-1, -1, 3}, {0, 0, 0}, {0, -1, 1}}},
    {{{-1, 1, 1}, {0, -2, 2}, {0, -1, 1}}},
    {{{-1, 0, 2}, {0, 0, 0}, {0, -2, 2}}},
    {{{-1, 1, 1}, {-1, 0, 2}, {0, -2, 2}}},
    {{{-1, 0, 2}, {-1, -1, 3}, {0, 0, 0}}},
}};

/// The five Laguerre prefactors in x with coefficients in R.
template <class R>
std::array<Poly<R>, 5> laguerre_prefactors(const R& alpha) {
  const R one = lift<R>(1), zero = lift<R>(0);
  const Poly<R> x({zero, one}, "x");
  return {-x, Poly<R>::constant(-alpha, "x"), Poly<R>({alpha + one, one}, "x"), x, -x};
}

template <class R>
std::array<Poly<R>, 5> jacobi_prefactors(int ell, const R& alpha, const R& beta) {
  const R one = lift<R>(1), two = lift<R>(2), zero = lift<R>(0);
  const Poly<R> one_plus_x({one, one}, "x");
  const Poly<R> one_minus_x({one, -one}, "x");
  const Poly<R> one_minus_x2({one, zero, -one}, "x");
  const R s = lift<R>(Rational(ell)) + alpha + beta + one;
  return {one_plus_x * (two * (alpha - one)), one_minus_x * (two * (beta + one)),
          -(one_plus_x * alpha + one_minus_x * (beta + two)) * two, one_minus_x2 * s,
          -(one_minus_x2 * s)};
}

template <class R>
Poly<R> product_of(int ell, const FactorTriple& t, const R& alpha, const R* beta,
                   const std::string& var) {
  Poly<R> out = Poly<R>::constant(lift<R>(1), var);
  for (const auto& f : t) {
    const R a = alpha + lift<R>(Rational(f.alpha_shift));
    out = out * (beta ? jacobi_poly(ell + f.degree_shift, a, *beta + lift<R>(Rational(f.beta_shift)), var)
                      : laguerre_poly(ell + f.degree_shift, a, var));
  }
  return out;
}

/// The five summands of the Laguerre cubic identity, unsummed.
template <class R>
std::array<Poly<R>, 5> cubic_laguerre_terms(int ell, const R& alpha) {
  const auto pre = laguerre_prefactors(alpha);
  std::array<Poly<R>, 5> out;
  for (std::size_t j = 0; j < 5; ++j)
    out[j] = pre[j] * product_of<R>(ell, kLaguerreFactors[j], alpha, nullptr, "x");
  return out;
}

template <class R>
std::array<Poly<R>, 5> cubic_jacobi_terms(int ell, const R& alpha, const R& beta) {
  const auto pre = jacobi_prefactors(ell, alpha, beta);
  std::array<Poly<R>, 5> out;
  for (std::size_t j = 0; j < 5; ++j)
    out[j] = pre[j] * product_of<R>(ell, kJacobiFactors[j], alpha, &beta, "x");
  return out;
}

template <class R>
Poly<R> cubic_laguerre_residual(int ell, const R& alpha) {
  Poly<R> sum;
  for (const auto& t : cubic_laguerre_terms(ell, alpha)) sum = sum + t;
  return sum;
}

template <class R>
Poly<R> cubic_jacobi_residual(int ell, const R& alpha, const R& beta) {
  Poly<R> sum;
  for (const auto& t : cubic_jacobi_terms(ell, alpha, beta)) sum = sum + t;
  return sum;
}

struct ResidualReport {
  std::string identity;
  int index = 0;            ///< ell or n
  std::string mode;         ///< "symbolic" or "grid" or "rational"
  bool is_zero = false;
  std::string residual;     ///< printed residual, "0" when zero
  double max_coefficient = 0.0;  ///< largest |rational| in the residual
  int degree_bound = 0;     ///< degree in x the residual would have if nonzero
  int evaluations = 1;      ///< grid points visited
};

ResidualReport cubic_laguerre_symbolic(int ell);
ResidualReport cubic_jacobi_symbolic(int ell);
/// Residual at 3 ell + 3 distinct rational alpha values.
ResidualReport cubic_laguerre_grid(int ell);
/// Residual on a (3 ell + 4)^2 grid of rational (alpha, beta).
ResidualReport cubic_jacobi_grid(int ell);

/// Term-by-term comparison of the Jacobi cubic summands, taken at x -> 1-2x/beta,
/// divided by -4 and with alpha -> alpha+1, against the Laguerre summands.
/// Jacobi summands 1..5 align with Laguerre summands 2, 1, 3, 5, 4.
struct LimitComparison {
  int ell = 0;
  std::vector<Rational> betas;
  /// gaps[i][j]: relative coefficient gap of Jacobi summand j at betas[i].
  std::vector<std::array<double, 5>> gaps;
  bool jacobi_residual_zero = true;
};

inline constexpr std::array<int, 5> kLimitAlignment{1, 0, 2, 4, 3};

LimitComparison laguerre_limit_of_jacobi_identity(int ell, const std::vector<Rational>& betas);

// ---------------------------------------------------------------------------
// Shape invariance

/// d/deta xi_ell(eta; lambda) through the forward shift: L_{ell-1}^{(a)}(-eta)
/// for the radial oscillator (a = g+ell-1/2), (ell+a+b+1)/2 P_{ell-1}^{(a+1,b+1)}
/// for the DPT cases with the xi parameters (a, b).
template <class S>
Poly<S> xi_derivative_image(SystemKind kind, int ell, const BasicParams<S>& p) {
  const S one = lift<S>(1);
  const S l = lift<S>(Rational(ell));
  if (kind == SystemKind::RadialOscillator) {
    const auto L = laguerre_poly(ell - 1, p.g + l - lift<S>(Rational(1, 2)), kEta);
    return substitute_affine(L, lift<S>(-1), lift<S>(0));
  }
  const S a = -p.g - l - lift<S>(Rational(1, 2));
  const S b = (kind == SystemKind::TrigDPT ? p.h : -p.h) + l - lift<S>(Rational(3, 2));
  const S c = ring_traits<S>::scaled(l + a + b + one, Rational(1, 2));
  return jacobi_poly(ell - 1, a + one, b + one, kEta) * c;
}

/// Right-hand side of the shape-invariance relation as an exact polynomial in
/// eta.  Every x-derivative factor is carried as d_x eta * (...), which is a
/// polynomial in eta once d xi/d eta is replaced by its forward-shift image;
/// each summand is brought to two such factors by
/// multiplying with (d_x eta)^2, and the sum is divided by (d_x eta)^2 with a
/// mandatory zero remainder.
template <class S>
Poly<S> shape_invariance_residual_generic(SystemKind kind, int ell, const BasicParams<S>& p) {
  auto xi = [&](int k) { return xi_poly(kind, ell, shifted(kind, p, k)); };
  const Poly<S> eta_sq = deta_sq<S>(kind);
  // d_x eta * d_x xi_k as a polynomial in eta
  auto dxi = [&](int k) { return eta_sq * xi_derivative_image(kind, ell, shifted(kind, p, k)); };
  const Poly<S> x0 = xi(0), x1 = xi(1), x2 = xi(2);
  const Poly<S> d0 = dxi(0), d1 = dxi(1), d2 = dxi(2);
  const Poly<S> tw2 = dtw0_eta(kind, shifted(kind, p, 2), ell);
  const Poly<S> tw0 = dtw0_eta(kind, p, ell);
  const Poly<S> w_l = dw0_eta(kind, shifted(kind, p, ell));
  const Poly<S> w_l1 = dw0_eta(kind, shifted(kind, p, ell + 1));
  const S half_gap = ring_traits<S>::scaled(
      tilde_energy(kind, shifted(kind, p, 2), ell) - tilde_energy(kind, p, ell), Rational(1, 2));

  Poly<S> lifted = tw2 * d2 * x0 * x1;
  lifted = lifted - tw0 * d0 * x1 * x2;
  lifted = lifted + eta_sq * x0 * x1 * x2 * half_gap;
  lifted = lifted + w_l * (d1 * x0 - d0 * x1) * x2;
  lifted = lifted - w_l1 * (d2 * x1 - d1 * x2) * x0;
  lifted = lifted - d0 * d1 * x2 + d1 * d2 * x0;
  return exact_div(lifted, eta_sq);
}

/// Rational parameters; checks admissibility first.
Poly<Rational> shape_invariance_residual(SystemKind kind, int ell, const Params& p);

/// Exact quotient in the coefficient ring; throws on a nonzero remainder.
template <class S>
S exact_quotient_of(const S& a, const S& b) {
  return ring_traits<S>::exact_quotient(a, b);
}

/// The same relation with each xi derivative replaced by its forward-shift
/// image and the summands grouped by their triple of classical factors.
/// Prefactors are normalized to the cubic identity convention (variable x,
/// radial eta -> -x then /4, trig /-(ell+a+b+1), hyp /(ell+a+b+1)).
template <class S>
struct ShapeStructure {
  std::array<Poly<S>, 5> prefactors;  ///< aligned with the cubic identity summands
  S triple_coefficient;               ///< coefficient of xi_0 xi_1 xi_2; must vanish
};

template <class S>
ShapeStructure<S> shape_invariance_structure(SystemKind kind, int ell, const BasicParams<S>& p) {
  const S one = lift<S>(1);
  const S l = lift<S>(Rational(ell));
  const bool radial = kind == SystemKind::RadialOscillator;
  // forward-shift constant c: d/deta xi_k = c * (classical at degree ell-1)
  S c = one;
  S alpha, beta = lift<S>(0);
  if (radial) {
    alpha = p.g + l - lift<S>(Rational(1, 2));
  } else {
    alpha = -p.g - l - lift<S>(Rational(1, 2));
    beta = (kind == SystemKind::TrigDPT ? p.h : -p.h) + l - lift<S>(Rational(3, 2));
    c = ring_traits<S>::scaled(l + alpha + beta + one, Rational(1, 2));
  }
  const Poly<S> tw2 = dtw0_eta(kind, shifted(kind, p, 2), ell);
  const Poly<S> tw0 = dtw0_eta(kind, p, ell);
  const Poly<S> w_l = dw0_eta(kind, shifted(kind, p, ell));
  const Poly<S> w_l1 = dw0_eta(kind, shifted(kind, p, ell + 1));
  const Poly<S> eta_sq = deta_sq<S>(kind);

  // Summand j of the cubic identity collects:
  //  1: xi'_2 xi_0 xi_1   2: xi'_0 xi_1 xi_2   3: xi'_1 xi_0 xi_2
  //  4: xi'_0 xi'_1 xi_2  5: xi'_1 xi'_2 xi_0
  std::array<Poly<S>, 5> pre{(tw2 - w_l1) * c, (-tw0 - w_l) * c, (w_l + w_l1) * c,
                             -(eta_sq * (c * c)), eta_sq * (c * c)};
  S triple = ring_traits<S>::scaled(
      tilde_energy(kind, shifted(kind, p, 2), ell) - tilde_energy(kind, p, ell), Rational(1, 2));

  const auto [divisor, scale, offset] = [&]() -> std::tuple<S, S, S> {
    switch (kind) {
      case SystemKind::RadialOscillator: return {lift<S>(4), lift<S>(-1), lift<S>(0)};
      case SystemKind::TrigDPT: return {-(l + alpha + beta + one), one, lift<S>(0)};
      case SystemKind::HypDPT: return {l + alpha + beta + one, one, lift<S>(0)};
    }
    return {one, one, lift<S>(0)};
  }();
  ShapeStructure<S> out;
  for (std::size_t j = 0; j < 5; ++j)
    out.prefactors[j] =
        exact_div_scalar(substitute_affine(pre[j], scale, offset), divisor).renamed("x");
  out.triple_coefficient = exact_quotient_of(triple, divisor);
  return out;
}

/// Pointwise shape-invariance defect of the deformed prepotential.  Throws
/// std::domain_error outside the open domain.
double delta_pointwise(SystemKind kind, int ell, const Params& p, double x);

/// |U_ell(x) - U_ell(x) with rescaled xi|, in long double.
double potential_scaling_gap(SystemKind kind, int ell, const Params& p, const XiScaling& scaling,
                             double x);

/// count interior sample points, kept a relative margin away from the
/// singular endpoints; unbounded domains are cut at a moderate x.
std::vector<double> interior_samples(SystemKind kind, int count, double margin = 1e-2);

/// Deterministic admissible draws for a kind and ell.
std::vector<Params> admissible_draws(SystemKind kind, int ell, int count, unsigned seed,
                                     int extra_levels = 0);

}  // namespace xell
