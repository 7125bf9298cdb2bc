#pragma once

#include <cmath>
#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xell/classical.hpp"
#include "xell/poly.hpp"
#include "xell/sturm.hpp"

namespace xell {

enum class SystemKind { RadialOscillator, TrigDPT, HypDPT };

std::string to_string(SystemKind kind);
/// "radial", "trig-dpt", "hyp-dpt".
SystemKind parse_system_kind(const std::string& name);

/// (g, h); h is ignored by the radial oscillator.
template <class S>
struct BasicParams {
  S g;
  S h;
};
using Params = BasicParams<Rational>;

class ConstraintViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline const char* const kEta = "eta";

// ---------------------------------------------------------------------------
// Parameter shifts and closed-form tables.  All are generic over the scalar so
// the same code serves rational samples and symbolic parameters.

/// Parameter shift delta: (1), (1,1), (1,-1).
inline std::pair<int, int> shift_vector(SystemKind kind) {
  switch (kind) {
    case SystemKind::RadialOscillator: return {1, 0};
    case SystemKind::TrigDPT: return {1, 1};
    case SystemKind::HypDPT: return {1, -1};
  }
  return {0, 0};
}

/// lambda + k*delta.
template <class S>
BasicParams<S> shifted(SystemKind kind, const BasicParams<S>& p, int k) {
  const auto [dg, dh] = shift_vector(kind);
  return {p.g + lift<S>(Rational(k * dg)), p.h + lift<S>(Rational(k * dh))};
}

/// Closed-form E_n(lambda).
template <class S>
S energy(SystemKind kind, const BasicParams<S>& p, int n) {
  const S nn = lift<S>(Rational(n));
  const S four_n = lift<S>(Rational(4 * n));
  switch (kind) {
    case SystemKind::RadialOscillator: return four_n;
    case SystemKind::TrigDPT: return four_n * (nn + p.g + p.h);
    case SystemKind::HypDPT: return four_n * (p.h - p.g - nn);
  }
  return four_n;
}

/// Eigenvalue of the deforming polynomial's own second-order equation.
template <class S>
S tilde_energy(SystemKind kind, const BasicParams<S>& p, int ell) {
  const S l = lift<S>(Rational(ell));
  const S one = lift<S>(1);
  switch (kind) {
    case SystemKind::RadialOscillator: return lift<S>(Rational(-4 * ell));
    case SystemKind::TrigDPT: return energy(kind, BasicParams<S>{-p.g - l, p.h + l - one}, ell);
    case SystemKind::HypDPT: return energy(kind, BasicParams<S>{-p.g - l, p.h - l + one}, ell);
  }
  return one;
}

/// d_x eta * d_x w0(x; lambda) as a polynomial in eta.
template <class S>
Poly<S> dw0_eta(SystemKind kind, const BasicParams<S>& p) {
  const S two = lift<S>(2);
  switch (kind) {
    case SystemKind::RadialOscillator: return Poly<S>({two * p.g, -two}, kEta);
    case SystemKind::TrigDPT: return Poly<S>({-two * (p.g - p.h), -two * (p.g + p.h)}, kEta);
    case SystemKind::HypDPT: return Poly<S>({two * (p.g + p.h), two * (p.g - p.h)}, kEta);
  }
  return {};
}

/// d_x eta * d_x w~0(x; lambda, ell) as a polynomial in eta.
template <class S>
Poly<S> dtw0_eta(SystemKind kind, const BasicParams<S>& p, int ell) {
  const S two = lift<S>(2);
  const S one = lift<S>(1);
  const S l = lift<S>(Rational(ell));
  switch (kind) {
    case SystemKind::RadialOscillator: return Poly<S>({two * (p.g + l - one), two}, kEta);
    case SystemKind::TrigDPT:
      return Poly<S>({two * (p.g + p.h + two * l - one), two * (p.g - p.h + one)}, kEta);
    case SystemKind::HypDPT:
      return Poly<S>({-two * (p.g - p.h + two * l - one), -two * (p.g + p.h + one)}, kEta);
  }
  return {};
}

/// (d_x eta)^2 as a polynomial in eta.
template <class S>
Poly<S> deta_sq(SystemKind kind) {
  const S z = lift<S>(0);
  const S four = lift<S>(4);
  switch (kind) {
    case SystemKind::RadialOscillator: return Poly<S>({z, four}, kEta);
    case SystemKind::TrigDPT: return Poly<S>({four, z, -four}, kEta);
    case SystemKind::HypDPT: return Poly<S>({-four, z, four}, kEta);
  }
  return {};
}

/// d_x^2 eta as a polynomial in eta.  Derived by differentiating (d_x eta)^2:
/// 2 eta' eta'' = d/dx (eta')^2 = (d/deta (eta')^2) eta', so eta'' = half the
/// eta-derivative of the table above: 2, -4 eta, 4 eta.
template <class S>
Poly<S> eta_second(SystemKind kind) {
  return scaled(derivative(deta_sq<S>(kind)), Rational(1, 2));
}

/// Classical eigenpolynomial P_n(eta; lambda).
template <class S>
Poly<S> classical_eigenpoly(SystemKind kind, int n, const BasicParams<S>& p) {
  const S half = lift<S>(Rational(1, 2));
  switch (kind) {
    case SystemKind::RadialOscillator: return laguerre_poly(n, p.g - half, kEta);
    case SystemKind::TrigDPT: return jacobi_poly(n, p.g - half, p.h - half, kEta);
    case SystemKind::HypDPT: return jacobi_poly(n, p.g - half, -p.h - half, kEta);
  }
  return {};
}

/// Deforming polynomial xi_ell(eta; lambda).  ell = -1 gives zero.
template <class S>
Poly<S> xi_poly(SystemKind kind, int ell, const BasicParams<S>& p) {
  const S l = lift<S>(Rational(ell));
  const S a = -p.g - l - lift<S>(Rational(1, 2));
  const S shift = l - lift<S>(Rational(3, 2));
  switch (kind) {
    case SystemKind::RadialOscillator: {
      const auto L = laguerre_poly(ell, p.g + shift, kEta);
      return substitute_affine(L, lift<S>(-1), lift<S>(0));
    }
    case SystemKind::TrigDPT: return jacobi_poly(ell, a, p.h + shift, kEta);
    case SystemKind::HypDPT: return jacobi_poly(ell, a, -p.h + shift, kEta);
  }
  return {};
}

/// -xi'' (eta')^2 - xi' eta'' - 2 (eta' w~0') xi' - E~ xi, pushed to eta.
template <class S>
Poly<S> xi_ode_residual(SystemKind kind, int ell, const BasicParams<S>& p) {
  const Poly<S> xi = xi_poly(kind, ell, p);
  const Poly<S> d1 = derivative(xi);
  const Poly<S> d2 = derivative(d1);
  return -(deta_sq<S>(kind) * d2 + eta_second<S>(kind) * d1) -
         dtw0_eta(kind, p, ell) * d1 * lift<S>(2) - xi * tilde_energy(kind, p, ell);
}

// ---------------------------------------------------------------------------
// Rational parameter layer

struct EtaDomain {
  Endpoint lo;
  Endpoint hi;
};

/// Image of the x-domain under eta: (0,inf), (-1,1), (1,inf).
EtaDomain eta_domain(SystemKind kind);

/// Number of hyperbolic bound states: the greatest integer strictly below
/// (h-g)/2.  Empty for the other systems (infinitely many).
std::optional<long> bound_state_count(SystemKind kind, const Params& p);

/// Throws ConstraintViolation naming the violated inequality.
void check_admissible(SystemKind kind, const Params& p, int ell);

struct SystemData {
  SystemKind kind;
  Params params;
  int ell;
  std::pair<int, int> delta;
  EtaDomain domain;
  Poly<Rational> deta_sq;
  Poly<Rational> eta_second;
  Poly<Rational> dw0;
  Poly<Rational> dtw0;
  Rational tilde_energy;
  Rational shifted_first_energy;  ///< E_1(lambda + ell*delta)
  std::optional<long> bound_states;
};

SystemData make_system(SystemKind kind, int ell, const Params& p);

/// Closed-form E_n, checked against sum_{k<n} E_1(lambda + k delta).
Rational energy_level(SystemKind kind, const Params& p, int n);

struct PositivityCertificate {
  std::string variable;         ///< "eta", "sin^2 x" or "sinh^2 x"
  int sign = 1;                 ///< (-1)^ell for the DPT cases
  std::vector<Rational> coefficients;  ///< re-expansion of sign*xi_ell
  std::vector<Rational> closed_form;   ///< termwise product-of-positives formula
};

/// Throws ConstraintViolation with the offending index when a coefficient is
/// not strictly positive or disagrees with the closed form.
PositivityCertificate xi_positivity_certificate(SystemKind kind, int ell, const Params& p);

struct XellPoly {
  SystemKind kind;
  int ell;
  int n;
  Params params;
  Poly<Rational> poly;  ///< in eta, degree ell + n
};

/// X_ell polynomial P_{ell,n}(eta; lambda).  ell = 0 returns P_n.
XellPoly xell_poly(SystemKind kind, int ell, int n, const Params& p);

/// P_n(eta; lambda) up to a rational constant, from the ladder
/// A^dag(lambda) ... A^dag(lambda+(n-1)delta) e^{w0(lambda+n delta)} acting
/// in eta-space.
Poly<Rational> rodrigues_polynomial(SystemKind kind, int n, const Params& p);

// ---------------------------------------------------------------------------
// Floating-point layer for transcendental quantities, templated on the float
// type.  long double is used where cancellation between large terms matters.

/// Value and first two x-derivatives.
template <std::floating_point F>
struct BasicJet {
  F value = 0;
  F d1 = 0;
  F d2 = 0;
};
using Jet = BasicJet<double>;

template <std::floating_point F>
struct FloatParams {
  F g = 0;
  F h = 0;
};
using DoubleParams = FloatParams<double>;

template <std::floating_point F>
FloatParams<F> to_float(const Params& p) {
  return {ring_traits<F>::from_rational(p.g), ring_traits<F>::from_rational(p.h)};
}
inline DoubleParams to_double(const Params& p) { return to_float<double>(p); }

/// Open x-domain: (0,inf), (0,pi/2), (0,inf).
std::pair<double, double> x_domain(SystemKind kind);
bool strictly_inside(SystemKind kind, double x);

/// eta(x) with eta', eta''.
template <std::floating_point F>
BasicJet<F> sinusoidal_coordinate(SystemKind kind, F x) {
  switch (kind) {
    case SystemKind::RadialOscillator: return {x * x, 2 * x, F(2)};
    case SystemKind::TrigDPT: return {std::cos(2 * x), -2 * std::sin(2 * x), -4 * std::cos(2 * x)};
    case SystemKind::HypDPT: return {std::cosh(2 * x), 2 * std::sinh(2 * x), 4 * std::cosh(2 * x)};
  }
  return {};
}

/// w0(x; lambda) with derivatives.
template <std::floating_point F>
BasicJet<F> prepotential_jet(SystemKind kind, const FloatParams<F>& p, F x) {
  switch (kind) {
    case SystemKind::RadialOscillator:
      return {-x * x / 2 + p.g * std::log(x), -x + p.g / x, -1 - p.g / (x * x)};
    case SystemKind::TrigDPT: {
      const F s = std::sin(x), c = std::cos(x);
      return {p.g * std::log(s) + p.h * std::log(c), p.g * c / s - p.h * s / c,
              -p.g / (s * s) - p.h / (c * c)};
    }
    case SystemKind::HypDPT: {
      const F s = std::sinh(x), c = std::cosh(x);
      return {p.g * std::log(s) - p.h * std::log(c), p.g * c / s - p.h * s / c,
              -p.g / (s * s) - p.h / (c * c)};
    }
  }
  return {};
}

/// log|q(eta(x))| with x-derivatives.
template <std::floating_point F>
BasicJet<F> log_poly_jet(const Poly<F>& q, const BasicJet<F>& eta) {
  const auto d1 = derivative(q);
  const auto d2 = derivative(d1);
  const F v = evaluate(q, eta.value);
  const F f1 = evaluate(d1, eta.value) * eta.d1;
  const F f2 = evaluate(d2, eta.value) * eta.d1 * eta.d1 + evaluate(d1, eta.value) * eta.d2;
  const F r = f1 / v;
  return {std::log(std::fabs(v)), r, f2 / v - r * r};
}

/// Positive constants multiplying xi_ell(.; lambda) and xi_ell(.; lambda+delta).
struct XiScaling {
  Rational at_lambda = Rational(1);
  Rational at_shifted = Rational(1);
};

/// w_ell(x; lambda) = w0(x; lambda+ell delta) + log xi(lambda+delta) - log xi(lambda).
template <std::floating_point F>
class BasicDeformedPrepotential {
 public:
  BasicDeformedPrepotential(SystemKind kind, int ell, const Params& p, const XiScaling& scaling = {})
      : kind_(kind),
        base_(to_float<F>(shifted(kind, p, ell))),
        xi_lambda_(to_float<F>(xi_poly(kind, ell, p) * scaling.at_lambda)),
        xi_shifted_(to_float<F>(xi_poly(kind, ell, shifted(kind, p, 1)) * scaling.at_shifted)) {
    if (scaling.at_lambda.sign() <= 0 || scaling.at_shifted.sign() <= 0)
      throw std::invalid_argument("xi scaling factors must be positive");
  }

  [[nodiscard]] BasicJet<F> operator()(F x) const {
    if (!strictly_inside(kind_, static_cast<double>(x)))
      throw std::domain_error("x = " + std::to_string(static_cast<double>(x)) +
                              " is outside the open domain");
    const auto eta = sinusoidal_coordinate(kind_, x);
    const auto w0 = prepotential_jet(kind_, base_, x);
    const auto up = log_poly_jet(xi_shifted_, eta);
    const auto down = log_poly_jet(xi_lambda_, eta);
    return {w0.value + up.value - down.value, w0.d1 + up.d1 - down.d1, w0.d2 + up.d2 - down.d2};
  }

  [[nodiscard]] F potential(F x) const {
    const auto w = (*this)(x);
    return w.d1 * w.d1 + w.d2;
  }

 private:
  SystemKind kind_;
  FloatParams<F> base_;
  Poly<F> xi_lambda_;
  Poly<F> xi_shifted_;
};
using DeformedPrepotential = BasicDeformedPrepotential<double>;

/// U_ell(x) = (w_ell')^2 + w_ell''.
template <std::floating_point F = double>
F deformed_potential(SystemKind kind, int ell, const Params& p, F x, const XiScaling& scaling = {}) {
  return BasicDeformedPrepotential<F>(kind, ell, p, scaling).potential(x);
}

/// |(-d^2 + U_ell - E_n(lambda+ell delta)) phi_{ell,n}| divided by the sum of
/// the magnitudes of its terms, with phi = psi_ell P_{ell,n} evaluated in
/// log-space.
double eigenfunction_residual(SystemKind kind, int ell, int n, const Params& p, double x);

}  // namespace xell
