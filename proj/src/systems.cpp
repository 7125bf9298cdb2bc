#include "xell/systems.hpp"

#include <cmath>
#include <numbers>

namespace xell {

std::string to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::RadialOscillator: return "radial";
    case SystemKind::TrigDPT: return "trig-dpt";
    case SystemKind::HypDPT: return "hyp-dpt";
  }
  return "?";
}

SystemKind parse_system_kind(const std::string& name) {
  if (name == "radial") return SystemKind::RadialOscillator;
  if (name == "trig-dpt") return SystemKind::TrigDPT;
  if (name == "hyp-dpt") return SystemKind::HypDPT;
  throw std::invalid_argument("unknown system '" + name + "' (radial|trig-dpt|hyp-dpt)");
}

EtaDomain eta_domain(SystemKind kind) {
  switch (kind) {
    case SystemKind::RadialOscillator: return {Endpoint::at(0), Endpoint::positive_infinity()};
    case SystemKind::TrigDPT: return {Endpoint::at(-1), Endpoint::at(1)};
    case SystemKind::HypDPT: return {Endpoint::at(1), Endpoint::positive_infinity()};
  }
  return {};
}

std::optional<long> bound_state_count(SystemKind kind, const Params& p) {
  if (kind != SystemKind::HypDPT) return std::nullopt;
  const Rational half_gap = (p.h - p.g) / Rational(2);
  Rational nb = half_gap.floor();
  if (half_gap.is_integer()) nb -= Rational(1);
  return mpz_class(nb.mpq().get_num()).get_si();
}

void check_admissible(SystemKind kind, const Params& p, int ell) {
  if (ell < 0) throw ConstraintViolation("ell >= 0 violated (ell = " + std::to_string(ell) + ")");
  if (p.g.sign() <= 0) throw ConstraintViolation("g > 0 violated (g = " + p.g.str() + ")");
  if (kind == SystemKind::RadialOscillator) return;
  if (!(p.h > p.g))
    throw ConstraintViolation("h > g > 0 violated (g = " + p.g.str() + ", h = " + p.h.str() + ")");
  if (kind == SystemKind::HypDPT) {
    const long nb = *bound_state_count(kind, p);
    if (ell >= nb)
      throw ConstraintViolation("ell < n_B violated (ell = " + std::to_string(ell) +
                                ", n_B = " + std::to_string(nb) + ")");
  }
}

SystemData make_system(SystemKind kind, int ell, const Params& p) {
  check_admissible(kind, p, ell);
  SystemData d{kind,
               p,
               ell,
               shift_vector(kind),
               eta_domain(kind),
               deta_sq<Rational>(kind),
               eta_second<Rational>(kind),
               dw0_eta(kind, p),
               dtw0_eta(kind, p, ell),
               tilde_energy(kind, p, ell),
               energy(kind, shifted(kind, p, ell), 1),
               bound_state_count(kind, p)};
  return d;
}

Rational energy_level(SystemKind kind, const Params& p, int n) {
  if (n < 0) throw std::invalid_argument("energy_level: n must be >= 0");
  const Rational closed = energy(kind, p, n);
  Rational telescoped(0);
  for (int k = 0; k < n; ++k) telescoped += energy(kind, shifted(kind, p, k), 1);
  if (closed != telescoped)
    throw std::logic_error("energy_level: closed form " + closed.str() +
                           " disagrees with telescoped sum " + telescoped.str());
  return closed;
}

PositivityCertificate xi_positivity_certificate(SystemKind kind, int ell, const Params& p) {
  check_admissible(kind, p, ell);
  const Poly<Rational> xi = xi_poly(kind, ell, p);
  PositivityCertificate cert;
  Poly<Rational> expanded;
  const Rational half(1, 2);
  const Rational lfact = factorial(ell);
  switch (kind) {
    case SystemKind::RadialOscillator:
      cert.variable = "eta";
      expanded = xi;
      for (int k = 0; k <= ell; ++k)
        cert.closed_form.push_back(pochhammer(p.g + Rational(ell + k) - half, ell - k) /
                                   (factorial(k) * factorial(ell - k)));
      break;
    case SystemKind::TrigDPT:
    case SystemKind::HypDPT: {
      const bool trig = kind == SystemKind::TrigDPT;
      cert.variable = trig ? "sin^2 x" : "sinh^2 x";
      cert.sign = ell % 2 == 0 ? 1 : -1;
      // eta = 1 - 2 sin^2 x, or 1 + 2 sinh^2 x
      expanded = substitute_affine(xi, Rational(trig ? -2 : 2), Rational(1)) * Rational(cert.sign);
      const Rational prefactor = pochhammer(p.g + half, ell) / lfact;
      for (int k = 0; k <= ell; ++k) {
        const Rational second = trig ? pochhammer(p.h - p.g + Rational(ell - 1), k)
                                     : pochhammer(p.g + p.h + Rational(2 - ell - k), k);
        cert.closed_form.push_back(prefactor * pochhammer(Rational(ell - k + 1), k) * second /
                                   (factorial(k) * pochhammer(p.g + Rational(ell - k) + half, k)));
      }
      break;
    }
  }
  for (int k = 0; k <= ell; ++k) cert.coefficients.push_back(expanded.coeff(static_cast<std::size_t>(k)));
  for (int k = 0; k <= ell; ++k) {
    const auto& c = cert.coefficients[static_cast<std::size_t>(k)];
    if (c.sign() <= 0)
      throw ConstraintViolation("positivity certificate: coefficient " + std::to_string(k) +
                                " = " + c.str() + " is not positive");
    if (c != cert.closed_form[static_cast<std::size_t>(k)])
      throw ConstraintViolation("positivity certificate: coefficient " + std::to_string(k) +
                                " = " + c.str() + " differs from closed form " +
                                cert.closed_form[static_cast<std::size_t>(k)].str());
  }
  return cert;
}

namespace {

Rational guarded_ratio(const Rational& num, const Rational& den, const std::string& factor_name) {
  if (den.is_zero())
    throw ConstraintViolation("vanishing structural denominator: " + factor_name + " = 0");
  return num / den;
}

}  // namespace

XellPoly xell_poly(SystemKind kind, int ell, int n, const Params& p) {
  if (ell < 0 || n < 0) throw std::invalid_argument("xell_poly: ell and n must be >= 0");
  XellPoly out{kind, ell, n, p, {}};
  if (ell == 0) {
    out.poly = classical_eigenpoly(kind, n, p);
    return out;
  }
  const Params top = shifted(kind, p, ell);
  const auto Pn = classical_eigenpoly(kind, n, top);
  const auto Pn1 = classical_eigenpoly(kind, n - 1, top);
  const Rational g = p.g, h = p.h;
  const Rational L(ell), N(n);

  if (kind == SystemKind::RadialOscillator) {
    out.poly = xi_poly(kind, ell, Params{g + 1, h}) * Pn -
               xi_poly(kind, ell - 1, Params{g + 2, h}) * Pn1;
  } else {
    const bool trig = kind == SystemKind::TrigDPT;
    // The hyperbolic data are the trigonometric ones with h -> -h in the
    // structural factors and the opposite h-shifts in the xi arguments.
    const Rational hs = trig ? h : -h;
    const int dh = trig ? 1 : -1;
    const Rational d_main = -g + hs + Rational(2) * L - 2;
    const Rational d_mix = g + hs + Rational(2) * N + Rational(2) * L - 1;
    const Rational d_g = Rational(2) * g + Rational(2) * N + 1;
    const std::string s = trig ? "+h" : "-h";
    const std::string main_name = "(-g" + s + "+2l-2)";
    const std::string mix_name = "(g" + s + "+2n+2l-1)";
    const std::string g_name = "(2g+2n+1)";

    const auto xi_l = xi_poly(kind, ell, Params{g + 1, h + Rational(dh)});
    const auto xi_l1 = xi_poly(kind, ell - 1, Params{g, h + Rational(2 * dh)});
    const auto xi_l2 = xi_poly(kind, ell - 2, Params{g + 1, h + Rational(3 * dh)});

    if (d_main.is_zero()) throw ConstraintViolation("vanishing structural denominator: " + main_name + " = 0");
    if (d_mix.is_zero()) throw ConstraintViolation("vanishing structural denominator: " + mix_name + " = 0");
    const Rational c1 = guarded_ratio(Rational(2) * N * (-g + hs + L - 1), d_main * d_mix,
                                      main_name + "*" + mix_name);
    const Rational c2 = guarded_ratio(N * (Rational(2) * hs + Rational(4) * L - 3), d_g * d_main,
                                      g_name + "*" + main_name);
    const Rational cb = guarded_ratio((-g + hs + L - 1) * (Rational(2) * g + Rational(2) * N + Rational(2) * L - 1),
                                      d_g * d_mix, g_name + "*" + mix_name);
    const auto a = xi_l + xi_l1 * c1 - xi_l2 * c2;
    const auto b = xi_l1 * cb;
    out.poly = a * Pn + b * Pn1;
  }
  if (!out.poly.degree() || *out.poly.degree() != static_cast<std::size_t>(ell + n))
    throw ConstraintViolation("xell_poly: degree drops below ell+n at these parameters");
  return out;
}

Poly<Rational> rodrigues_polynomial(SystemKind kind, int n, const Params& p) {
  if (n < 0) throw std::invalid_argument("rodrigues_polynomial: n must be >= 0");
  // e^{w0(lambda+delta) - w0(lambda)} = kappa * eta'
  Rational kappa;
  switch (kind) {
    case SystemKind::RadialOscillator: kappa = Rational(1, 2); break;
    case SystemKind::TrigDPT: kappa = Rational(-1, 4); break;
    case SystemKind::HypDPT: kappa = Rational(1, 4); break;
  }
  const auto eta_sq = deta_sq<Rational>(kind);
  Poly<Rational> q = Poly<Rational>::constant(1, kEta);
  for (int k = n - 1; k >= 0; --k) {
    // A^dag(mu) [e^{w0(mu+delta)} q] = e^{w0(mu)} * (-kappa) [(eta' w0'(mu+delta) + eta' w0'(mu)) q + eta'^2 q']
    const auto sum_dw = dw0_eta(kind, shifted(kind, p, k + 1)) + dw0_eta(kind, shifted(kind, p, k));
    q = (sum_dw * q + eta_sq * derivative(q)) * (-kappa);
  }
  return q;
}

// ---------------------------------------------------------------------------

std::pair<double, double> x_domain(SystemKind kind) {
  if (kind == SystemKind::TrigDPT) return {0.0, std::numbers::pi / 2};
  return {0.0, std::numeric_limits<double>::infinity()};
}

bool strictly_inside(SystemKind kind, double x) {
  const auto [lo, hi] = x_domain(kind);
  return std::isfinite(x) && x > lo && x < hi;
}

double eigenfunction_residual(SystemKind kind, int ell, int n, const Params& p, double x) {
  const DeformedPrepotential w(kind, ell, p);
  const double U = w.potential(x);
  const double E = energy(kind, shifted(kind, p, ell), n).to_double();
  const Jet eta = sinusoidal_coordinate(kind, x);
  // phi = e^W * Phat with W = w0(lambda+ell delta) - log xi(lambda)
  const Jet w0 = prepotential_jet(kind, to_double(shifted(kind, p, ell)), x);
  const Jet lxi = log_poly_jet(to_double(xi_poly(kind, ell, p)), eta);
  const double W1 = w0.d1 - lxi.d1;
  const double W2 = w0.d2 - lxi.d2;
  const auto P = to_double(xell_poly(kind, ell, n, p).poly);
  const auto P1 = derivative(P);
  const auto P2 = derivative(P1);
  const double f = evaluate(P, eta.value);
  const double f1 = evaluate(P1, eta.value) * eta.d1;
  const double f2 = evaluate(P2, eta.value) * eta.d1 * eta.d1 + evaluate(P1, eta.value) * eta.d2;
  const double t_kin = -(W2 + W1 * W1) * f - 2 * W1 * f1 - f2;
  const double r = t_kin + (U - E) * f;
  const double scale = std::fabs((W2 + W1 * W1) * f) + std::fabs(2 * W1 * f1) + std::fabs(f2) +
                       std::fabs(U * f) + std::fabs(E * f);
  return scale == 0.0 ? 0.0 : std::fabs(r) / scale;
}

}  // namespace xell
