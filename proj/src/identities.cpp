#include "xell/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace xell {

std::string to_string(LemmaId id) {
  switch (id) {
    case LemmaId::A: return "A";
    case LemmaId::B: return "B";
    case LemmaId::C: return "C";
    case LemmaId::D: return "D";
  }
  return "?";
}

bool lemma_holds_symbolically(LemmaId id, int n, bool in_x) {
  if (id == LemmaId::A || id == LemmaId::B) {
    const auto a = sym::symbol("alpha");
    return lemma_residual(id, n, a, a).is_zero();
  }
  const auto a = sym::outer_symbol("alpha");
  const auto b = sym::inner_symbol("alpha", "beta");
  return lemma_residual(id, n, a, b, !in_x).is_zero();
}

namespace {

double max_abs(const std::vector<Rational>& v) {
  double m = 0.0;
  for (const auto& q : v) m = std::max(m, std::fabs(q.to_double()));
  return m;
}

template <class R>
ResidualReport report_from(std::string name, int ell, std::string mode, const Poly<R>& residual,
                           int evaluations) {
  ResidualReport r;
  r.identity = std::move(name);
  r.index = ell;
  r.mode = std::move(mode);
  r.is_zero = residual.is_zero();
  r.residual = r.is_zero ? "0" : to_string(residual);
  r.max_coefficient = max_abs(flatten_numbers(residual));
  r.degree_bound = 3 * ell;
  r.evaluations = evaluations;
  return r;
}

// Non-integer rationals spread around zero, so no shifted Jacobi parameter
// lands on a negative integer.
Rational grid_value(int i, int count, int salt) {
  return Rational(6 * i - 3 * count + 1, 6) + Rational(salt, 35);
}

}  // namespace

ResidualReport cubic_laguerre_symbolic(int ell) {
  return report_from("cubic-laguerre", ell, "symbolic",
                     cubic_laguerre_residual(ell, sym::symbol("alpha")), 1);
}

ResidualReport cubic_jacobi_symbolic(int ell) {
  return report_from("cubic-jacobi", ell, "symbolic",
                     cubic_jacobi_residual(ell, sym::outer_symbol("alpha"),
                                           sym::inner_symbol("alpha", "beta")),
                     1);
}

ResidualReport cubic_laguerre_grid(int ell) {
  const int count = 3 * ell + 3;
  for (int i = 0; i < count; ++i) {
    const auto r = cubic_laguerre_residual(ell, grid_value(i, count, 1));
    if (!r.is_zero()) {
      auto rep = report_from("cubic-laguerre", ell, "grid", r, i + 1);
      rep.residual += " at alpha=" + grid_value(i, count, 1).str();
      return rep;
    }
  }
  return report_from("cubic-laguerre", ell, "grid", Poly<Rational>(), count);
}

ResidualReport cubic_jacobi_grid(int ell) {
  const int count = 3 * ell + 4;
  int visited = 0;
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      ++visited;
      const Rational a = grid_value(i, count, 1), b = grid_value(j, count, 2);
      const auto r = cubic_jacobi_residual(ell, a, b);
      if (!r.is_zero()) {
        auto rep = report_from("cubic-jacobi", ell, "grid", r, visited);
        rep.residual += " at alpha=" + a.str() + ", beta=" + b.str();
        return rep;
      }
    }
  return report_from("cubic-jacobi", ell, "grid", Poly<Rational>(), visited);
}

LimitComparison laguerre_limit_of_jacobi_identity(int ell, const std::vector<Rational>& betas) {
  using U = sym::Univariate;
  const U alpha = sym::symbol("alpha");
  const U one = lift<U>(1);
  const auto lag = cubic_laguerre_terms(ell, alpha);
  LimitComparison out;
  out.ell = ell;
  out.betas = betas;
  for (const auto& beta : betas) {
    if (beta.sign() <= 0) throw std::invalid_argument("limit comparison needs beta > 0");
    const auto jac = cubic_jacobi_terms(ell, alpha + one, lift<U>(beta));
    Poly<U> sum;
    std::array<double, 5> gaps{};
    for (std::size_t j = 0; j < 5; ++j) {
      sum = sum + jac[j];
      const auto mapped =
          scaled(substitute_affine(jac[j], lift<U>(Rational(-2) / beta), one), Rational(-1, 4));
      const auto& target = lag[static_cast<std::size_t>(kLimitAlignment[j])];
      const double scale = max_abs(flatten_numbers(target));
      const double diff = max_abs(flatten_numbers(mapped - target));
      gaps[j] = scale == 0.0 ? diff : diff / scale;
    }
    out.jacobi_residual_zero = out.jacobi_residual_zero && sum.is_zero();
    out.gaps.push_back(gaps);
  }
  return out;
}

Poly<Rational> shape_invariance_residual(SystemKind kind, int ell, const Params& p) {
  if (ell < 1) throw std::invalid_argument("shape_invariance_residual: ell must be >= 1");
  check_admissible(kind, p, ell);
  return shape_invariance_residual_generic(kind, ell, p);
}

double delta_pointwise(SystemKind kind, int ell, const Params& p, double x) {
  if (!strictly_inside(kind, x))
    throw std::domain_error("delta_pointwise: x = " + std::to_string(x) + " is not interior");
  // extended precision: the four squared terms are large near the edges
  using F = long double;
  const BasicDeformedPrepotential<F> w(kind, ell, p);
  const BasicDeformedPrepotential<F> ws(kind, ell, shifted(kind, p, 1));
  const auto a = w(x), b = ws(x);
  const F e1 = energy(kind, shifted(kind, p, ell), 1).to_long_double();
  return static_cast<double>(a.d1 * a.d1 - a.d2 - b.d1 * b.d1 - b.d2 - e1);
}

double potential_scaling_gap(SystemKind kind, int ell, const Params& p, const XiScaling& scaling,
                             double x) {
  using F = long double;
  const F u = deformed_potential<F>(kind, ell, p, x);
  const F v = deformed_potential<F>(kind, ell, p, x, scaling);
  return static_cast<double>(std::fabs(u - v));
}

std::vector<double> interior_samples(SystemKind kind, int count, double margin) {
  if (count < 1) return {};
  double lo = 0.0, hi = 0.0;
  switch (kind) {
    case SystemKind::RadialOscillator: lo = 4.0 * margin; hi = 4.0; break;
    case SystemKind::TrigDPT:
      lo = margin * std::numbers::pi / 2;
      hi = (1.0 - margin) * std::numbers::pi / 2;
      break;
    case SystemKind::HypDPT: lo = 2.0 * margin; hi = 2.0; break;
  }
  std::vector<double> xs;
  for (int i = 0; i < count; ++i)
    xs.push_back(count == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (count - 1));
  return xs;
}

std::vector<Params> admissible_draws(SystemKind kind, int ell, int count, unsigned seed,
                                     int extra_levels) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(1, 30);
  std::uniform_int_distribution<int> den(1, 6);
  std::vector<Params> out;
  while (static_cast<int>(out.size()) < count) {
    const Rational g(num(rng), den(rng));
    Rational h = g + Rational(num(rng), den(rng));
    // keep the deformed hyperbolic levels ell + n below (h-g)/2
    if (kind == SystemKind::HypDPT) h = g + Rational(2 * (ell + extra_levels) + 3) + Rational(num(rng), den(rng));
    const Params p{g, kind == SystemKind::RadialOscillator ? Rational(0) : h};
    try {
      check_admissible(kind, p, ell);
      out.push_back(p);
    } catch (const ConstraintViolation&) {
    }
  }
  return out;
}

}  // namespace xell
