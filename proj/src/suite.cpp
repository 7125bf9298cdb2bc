#include "xell/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace xell {

FamilySelection parse_family(const std::string& s) {
  if (s == "laguerre") return FamilySelection::Laguerre;
  if (s == "jacobi") return FamilySelection::Jacobi;
  if (s == "all") return FamilySelection::All;
  throw std::invalid_argument("unknown family '" + s + "'");
}

CubicMode parse_cubic_mode(const std::string& s) {
  if (s == "symbolic") return CubicMode::Symbolic;
  if (s == "grid") return CubicMode::Grid;
  if (s == "both") return CubicMode::Both;
  throw std::invalid_argument("unknown mode '" + s + "'");
}

namespace {

const SystemKind kAllKinds[] = {SystemKind::RadialOscillator, SystemKind::TrigDPT,
                                SystemKind::HypDPT};

std::string key(const char* k, int v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s=%02d", k, v);
  return buf;
}

std::string params_text(SystemKind kind, const Params& p) {
  if (kind == SystemKind::RadialOscillator) return "g=" + p.g.str();
  return "g=" + p.g.str() + ", h=" + p.h.str();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

template <class R>
Check poly_zero_check(std::string name, const Poly<R>& residual) {
  if (residual.is_zero()) return exact_check(std::move(name), true);
  double m = 0.0;
  for (const auto& q : flatten_numbers(residual)) m = std::max(m, std::fabs(q.to_double()));
  return exact_check(std::move(name), false, m, to_string(residual));
}

Check from_residual_report(std::string name, const ResidualReport& r) {
  Check c = exact_check(std::move(name), r.is_zero, r.max_coefficient, r.residual);
  if (r.is_zero && r.mode == "grid") c.detail = std::to_string(r.evaluations) + " parameter points";
  return c;
}

Task single(std::string name, std::function<Check()> f) {
  return {name, [f = std::move(f)] { return std::vector<Check>{f()}; }};
}

// --- individual check families -------------------------------------------

Check lemma_check(LemmaId id, int n) {
  const std::string name = "lemma-" + to_string(id) + "/" + key("n", n);
  if (id == LemmaId::A || id == LemmaId::B) {
    const auto a = sym::symbol("alpha");
    return poly_zero_check(name, lemma_residual(id, n, a, a));
  }
  const auto a = sym::outer_symbol("alpha");
  const auto b = sym::inner_symbol("alpha", "beta");
  return poly_zero_check(name, lemma_residual(id, n, a, b, true));
}

std::vector<Check> shape_config(SystemKind kind, int ell, const Params& p, const std::string& base) {
  std::vector<Check> out;
  Check exact = poly_zero_check(base + "/exact", shape_invariance_residual(kind, ell, p));
  exact.detail = params_text(kind, p) + (exact.detail.empty() ? "" : "; " + exact.detail);
  out.push_back(std::move(exact));
  double worst = 0.0;
  for (double x : interior_samples(kind, 20)) worst = std::max(worst, std::fabs(delta_pointwise(kind, ell, p, x)));
  out.push_back(bound_check(base + "/pointwise", worst, 1e-9, params_text(kind, p) + ", 20 interior samples"));
  return out;
}

std::vector<Check> orthogonality_config(SystemKind kind, int ell, int n_max, const Params& p,
                                        const std::string& base) {
  const auto G = orthogonality_gram(kind, ell, p, n_max);
  const std::string how = G.method + ", order " + std::to_string(G.order);
  return {bound_check(base + "/off-diagonal", G.max_off_diagonal(), 1e-8, how),
          predicate_check(base + "/diagonal-positive", G.min_diagonal() > 0.0,
                          "min diagonal " + fmt(G.min_diagonal())),
          bound_check(base + "/convergence", G.last_change, 1e-10, "last doubling change")};
}

Check zero_check(SystemKind kind, int ell, int n, const Params& p, const std::string& name) {
  const auto dom = eta_domain(kind);
  const int count = sturm_count_roots(xell_poly(kind, ell, n, p).poly, dom.lo, dom.hi);
  return predicate_check(name, count == n,
                         std::to_string(count) + " roots in the eta domain, degree " + std::to_string(ell + n));
}

std::vector<Check> positivity_config(SystemKind kind, int ell, const Params& p, const std::string& base) {
  std::vector<Check> out;
  try {
    const auto cert = xi_positivity_certificate(kind, ell, p);
    out.push_back(predicate_check(base + "/certificate", true,
                                  std::to_string(cert.coefficients.size()) + " positive coefficients in " +
                                      cert.variable + ", " + params_text(kind, p)));
  } catch (const ConstraintViolation& e) {
    out.push_back(predicate_check(base + "/certificate", false, e.what()));
  }
  const auto dom = eta_domain(kind);
  const int roots = sturm_count_roots(xi_poly(kind, ell, p), dom.lo, dom.hi);
  out.push_back(predicate_check(base + "/no-roots", roots == 0, std::to_string(roots) + " roots in the domain"));
  return out;
}

std::vector<Check> limit_point(int n, const Rational& alpha, double beta, double x, const std::string& base) {
  const double e1 = jacobi_laguerre_limit_error(n, alpha, beta, x);
  const double e2 = jacobi_laguerre_limit_error(n, alpha, 2 * beta, x);
  if (n == 0) return {predicate_check(base + "/ratio", e1 == 0.0 && e2 == 0.0, "both sides are 1")};
  const double ratio = e1 / e2;
  const double a = std::fabs(alpha.to_double());
  Check r = predicate_check(base + "/ratio", ratio >= 1.8 && ratio <= 2.2,
                            "err(beta)=" + fmt(e1) + ", err(2 beta)=" + fmt(e2) + ", ratio " + fmt(ratio));
  r.residual = e1;
  return {std::move(r), bound_check(base + "/bound", e1, 10.0 * (n * n + a * n + n) / beta,
                                     "10 (n^2 + |alpha| n + n) / beta")};
}

// --- acceptance criteria --------------------------------------------------

std::vector<Task> c01(bool quick) {
  std::vector<Task> t;
  for (int ell = 0; ell <= (quick ? 6 : 10); ++ell)
    t.push_back(single("cubic-laguerre", [ell] {
      return from_residual_report("cubic-laguerre/" + key("ell", ell), cubic_laguerre_symbolic(ell));
    }));
  return t;
}

std::vector<Task> c02(bool quick) {
  std::vector<Task> t;
  for (int ell = 0; ell <= (quick ? 4 : 8); ++ell)
    t.push_back(single("cubic-jacobi", [ell] {
      return from_residual_report("cubic-jacobi/" + key("ell", ell), cubic_jacobi_symbolic(ell));
    }));
  return t;
}

std::vector<Task> c03(bool quick) { return lemma_tasks(quick ? 15 : 30, FamilySelection::All); }

std::vector<Task> c04(bool quick) {
  std::vector<Task> t;
  for (auto kind : kAllKinds)
    for (int ell = 1; ell <= (quick ? 3 : 6); ++ell) {
      const auto draws = admissible_draws(kind, ell, quick ? 2 : 5, 1000u + static_cast<unsigned>(ell));
      for (std::size_t d = 0; d < draws.size(); ++d) {
        const std::string base = "shape/" + to_string(kind) + "/" + key("ell", ell) + "/" + key("draw", static_cast<int>(d));
        t.push_back({base, [=] { return shape_config(kind, ell, draws[d], base); }});
      }
    }
  return t;
}

std::vector<Task> c05(bool quick) {
  std::vector<Task> t;
  for (int ell = 1; ell <= (quick ? 2 : 4); ++ell)
    t.push_back({"reduction", [ell] {
      using S = sym::Bivariate;
      const auto a = sym::outer_symbol("alpha");
      const auto b = sym::inner_symbol("alpha", "beta");
      const S l = lift<S>(Rational(ell));
      const S g = -a - l - lift<S>(Rational(1, 2));
      const S h_trig = b - l + lift<S>(Rational(3, 2));
      const S h_hyp = -b + l - lift<S>(Rational(3, 2));
      const auto trig = shape_invariance_structure(SystemKind::TrigDPT, ell, BasicParams<S>{g, h_trig});
      const auto hyp = shape_invariance_structure(SystemKind::HypDPT, ell, BasicParams<S>{g, h_hyp});
      const auto jac = jacobi_prefactors(ell, a, b);
      bool same = true, matches = true;
      for (std::size_t j = 0; j < 5; ++j) {
        same = same && trig.prefactors[j] == hyp.prefactors[j];
        matches = matches && trig.prefactors[j] == jac[j];
      }
      const std::string base = "reduction/" + key("ell", ell);
      return std::vector<Check>{
          predicate_check(base + "/trig-equals-hyp", same && trig.triple_coefficient.is_zero() &&
                                                         hyp.triple_coefficient.is_zero(),
                          "five cubic prefactors after normalization"),
          predicate_check(base + "/equals-jacobi-identity", matches, "prefactors of the cubic Jacobi identity")};
    }});
  return t;
}

std::vector<Task> c06(bool quick) {
  std::vector<Task> t;
  for (auto kind : kAllKinds)
    for (int ell = 0; ell <= (quick ? 3 : 6); ++ell)
      t.push_back(single("xi-ode", [kind, ell] {
        const auto g = sym::outer_symbol("g");
        const auto h = sym::inner_symbol("g", "h");
        Check c = poly_zero_check("xi-ode/" + to_string(kind) + "/" + key("ell", ell),
                                  xi_ode_residual(kind, ell, BasicParams<sym::Bivariate>{g, h}));
        if (c.status == Status::Pass) c.detail = "symbolic g, h";
        return c;
      }));
  return t;
}

std::vector<Task> c07(bool quick) {
  std::vector<Task> t;
  for (auto kind : kAllKinds)
    for (int ell = 0; ell <= (quick ? 3 : 6); ++ell) {
      const auto draws = admissible_draws(kind, ell, quick ? 3 : 10, 2000u + static_cast<unsigned>(ell));
      for (std::size_t d = 0; d < draws.size(); ++d) {
        const std::string base = "positivity/" + to_string(kind) + "/" + key("ell", ell) + "/" + key("draw", static_cast<int>(d));
        t.push_back({base, [=] { return positivity_config(kind, ell, draws[d], base); }});
      }
    }
  return t;
}

std::vector<Task> c08(bool quick) {
  std::vector<Task> t;
  const int n_max = quick ? 5 : 8;
  for (auto kind : kAllKinds)
    for (int ell = 0; ell <= (quick ? 2 : 3); ++ell) {
      const Params p = admissible_draws(kind, ell, 1, 3000u + static_cast<unsigned>(ell), n_max).front();
      for (int n = 0; n <= n_max; ++n) {
        const std::string name = "zeros/" + to_string(kind) + "/" + key("ell", ell) + "/" + key("n", n);
        t.push_back(single(name, [=] { return zero_check(kind, ell, n, p, name); }));
      }
    }
  return t;
}

const Params kOrthoParams[] = {{Rational(3, 2), Rational(0)}, {Rational(5, 4), Rational(7, 3)},
                               {Rational(1), Rational(21)}};

std::vector<Task> c09(bool quick) {
  std::vector<Task> t;
  for (std::size_t k = 0; k < 3; ++k)
    for (int ell = 0; ell <= (quick ? 2 : 3); ++ell) {
      const auto kind = kAllKinds[k];
      const std::string base = "orthogonality/" + to_string(kind) + "/" + key("ell", ell);
      t.push_back({base, [=] { return orthogonality_config(kind, ell, quick ? 3 : 5, kOrthoParams[k], base); }});
    }
  return t;
}

std::vector<Task> c10(bool) {
  struct Case { SystemKind kind; Params p; int levels; };
  const Case cases[] = {{SystemKind::RadialOscillator, {Rational(1), Rational(0)}, 3},
                        {SystemKind::TrigDPT, {Rational(1), Rational(2)}, 2},
                        {SystemKind::HypDPT, {Rational(1), Rational(12)}, 2}};
  std::vector<Task> t;
  for (const auto& c : cases)
    t.push_back({"spectrum/" + to_string(c.kind), [c] {
      return spectrum_report(c.kind, 1, c.p, c.levels, default_grid(c.kind)).checks;
    }});
  return t;
}

std::vector<Task> c11(bool quick) {
  std::vector<Task> t;
  for (auto kind : kAllKinds) {
    const auto draws = admissible_draws(kind, 0, 2, 4000u);
    for (std::size_t d = 0; d < draws.size(); ++d)
      for (int n = 0; n <= (quick ? 3 : 5); ++n) {
        const std::string name = "rodrigues/" + to_string(kind) + "/" + key("draw", static_cast<int>(d)) + "/" + key("n", n);
        const Params p = draws[d];
        t.push_back(single(name, [=] {
          const auto ratio = collinearity_ratio(rodrigues_polynomial(kind, n, p), classical_eigenpoly(kind, n, p));
          return predicate_check(name, ratio.has_value(),
                                 ratio ? "ratio " + ratio->str() + ", " + params_text(kind, p) : "not collinear");
        }));
      }
  }
  return t;
}

std::vector<Task> c12(bool) {
  std::vector<Task> t;
  for (int n = 0; n <= 4; ++n)
    for (double x : {0.5, 1.0, 1.5, 3.0}) {
      std::ostringstream base;
      base << "limit/" << key("n", n) << "/x=" << x;
      t.push_back({base.str(), [n, x, b = base.str()] { return limit_point(n, Rational(1, 2), 1e5, x, b); }});
    }
  for (int ell = 1; ell <= 3; ++ell)
    t.push_back({"limit-identity", [ell] {
      const auto c = laguerre_limit_of_jacobi_identity(ell, {Rational(1000), Rational(2000), Rational(4000)});
      std::vector<Check> out;
      const std::string base = "limit-identity/" + key("ell", ell);
      out.push_back(predicate_check(base + "/jacobi-zero", c.jacobi_residual_zero, "Jacobi side sums to zero"));
      for (std::size_t j = 0; j < 5; ++j) {
        const double r1 = c.gaps[0][j] / c.gaps[1][j], r2 = c.gaps[1][j] / c.gaps[2][j];
        Check ck = predicate_check(base + "/" + key("term", static_cast<int>(j + 1)),
                                   r1 >= 1.8 && r1 <= 2.2 && r2 >= 1.8 && r2 <= 2.2,
                                   "gap ratios " + fmt(r1) + ", " + fmt(r2));
        ck.residual = c.gaps[2][j];
        out.push_back(std::move(ck));
      }
      return out;
    }});
  return t;
}

std::vector<Task> c13(bool) {
  std::vector<Task> t;
  const Params p{Rational(3, 2), Rational(25, 2)};
  const XiScaling scalings[] = {{Rational(7, 3), Rational(7, 3)}, {Rational(5, 11), Rational(13, 2)}};
  for (auto kind : kAllKinds)
    for (int ell = 1; ell <= 4; ++ell) {
      const std::string name = "normalization/" + to_string(kind) + "/" + key("ell", ell);
      t.push_back(single(name, [=] {
        double worst = 0.0;
        for (const auto& s : scalings)
          for (double x : interior_samples(kind, 20)) worst = std::max(worst, potential_scaling_gap(kind, ell, p, s, x));
        return bound_check(name, worst, 1e-12, "U_ell under xi rescaling, 20 samples, 2 scalings");
      }));
    }
  return t;
}

}  // namespace

// --- public builders --------------------------------------------------------

std::vector<Task> lemma_tasks(int n_max, FamilySelection family) {
  std::vector<LemmaId> ids;
  if (family != FamilySelection::Jacobi) ids.insert(ids.end(), {LemmaId::A, LemmaId::B});
  if (family != FamilySelection::Laguerre) ids.insert(ids.end(), {LemmaId::C, LemmaId::D});
  std::vector<Task> t;
  for (auto id : ids)
    for (int n = 0; n <= n_max; ++n) t.push_back(single("lemma-" + to_string(id), [id, n] { return lemma_check(id, n); }));
  return t;
}

std::vector<Task> cubic_tasks(FamilySelection family, int ell_max, CubicMode mode) {
  std::vector<Task> t;
  const bool sym = mode != CubicMode::Grid, grid = mode != CubicMode::Symbolic;
  for (int ell = 0; ell <= ell_max; ++ell) {
    if (family != FamilySelection::Jacobi) {
      if (sym) t.push_back(single("cubic-laguerre", [ell] { return from_residual_report("cubic-laguerre/" + key("ell", ell) + "/symbolic", cubic_laguerre_symbolic(ell)); }));
      if (grid) t.push_back(single("cubic-laguerre", [ell] { return from_residual_report("cubic-laguerre/" + key("ell", ell) + "/grid", cubic_laguerre_grid(ell)); }));
    }
    if (family != FamilySelection::Laguerre) {
      if (sym) t.push_back(single("cubic-jacobi", [ell] { return from_residual_report("cubic-jacobi/" + key("ell", ell) + "/symbolic", cubic_jacobi_symbolic(ell)); }));
      if (grid) t.push_back(single("cubic-jacobi", [ell] { return from_residual_report("cubic-jacobi/" + key("ell", ell) + "/grid", cubic_jacobi_grid(ell)); }));
    }
  }
  return t;
}

std::vector<Task> shape_tasks(SystemKind kind, int ell, const Params& p, int seeds, unsigned rng_seed) {
  std::vector<Params> all{p};
  if (seeds > 0) {
    const auto draws = admissible_draws(kind, ell, seeds, rng_seed);
    all.insert(all.end(), draws.begin(), draws.end());
  }
  std::vector<Task> t;
  for (std::size_t d = 0; d < all.size(); ++d) {
    const std::string base = "shape/" + to_string(kind) + "/" + key("ell", ell) + "/" +
                             (d == 0 ? std::string("given") : key("seed", static_cast<int>(d)));
    const Params q = all[d];
    t.push_back({base, [=] { return shape_config(kind, ell, q, base); }});
  }
  return t;
}

std::vector<Task> orthogonality_tasks(SystemKind kind, int ell, int n_max, const Params& p) {
  const std::string base = "orthogonality/" + to_string(kind) + "/" + key("ell", ell);
  return {{base, [=] { return orthogonality_config(kind, ell, n_max, p, base); }}};
}

std::vector<Task> zero_tasks(SystemKind kind, int ell, int n_max, const Params& p) {
  std::vector<Task> t;
  for (int n = 0; n <= n_max; ++n) {
    const std::string name = "zeros/" + to_string(kind) + "/" + key("ell", ell) + "/" + key("n", n);
    t.push_back(single(name, [=] { return zero_check(kind, ell, n, p, name); }));
  }
  return t;
}

std::vector<Task> ode_tasks(SystemKind kind, int ell, const Params& p) {
  const std::string name = "xi-ode/" + to_string(kind) + "/" + key("ell", ell);
  return {single(name, [=] {
    Check c = poly_zero_check(name, xi_ode_residual(kind, ell, p));
    if (c.status == Status::Pass) c.detail = params_text(kind, p);
    return c;
  })};
}

std::vector<Task> limit_tasks(int n, const Rational& alpha, double beta_start) {
  std::vector<Task> t;
  for (double x : {0.5, 1.0, 1.5, 3.0}) {
    std::ostringstream base;
    base << "limit/" << key("n", n) << "/x=" << x;
    t.push_back({base.str(), [=, b = base.str()] { return limit_point(n, alpha, beta_start, x, b); }});
  }
  return t;
}

SpectrumResult spectrum_report(SystemKind kind, int ell, const Params& p, int levels, const Grid& grid) {
  check_admissible(kind, p, ell);
  if (kind == SystemKind::HypDPT) {
    const Rational top = (p.h - p.g) / Rational(2) - Rational(ell);
    if (!(Rational(levels - 1) < top))
      throw ConstraintViolation("levels: need n < (h-g)/2 - ell for every requested level");
  }
  const auto fd = fd_spectrum(kind, ell, p, grid, levels);
  SpectrumResult out;
  out.grid = grid;
  const auto lp = shifted(kind, p, ell);
  for (int n = 0; n < levels; ++n) {
    SpectrumRow row{n, fd.eigenvalues[static_cast<std::size_t>(n)], fd.refined[static_cast<std::size_t>(n)],
                    energy(kind, lp, n).to_double()};
    out.rows.push_back(row);
    const double abs_err = std::fabs(row.numeric - row.closed_form);
    const std::string name = "spectrum/" + to_string(kind) + "/" + key("ell", ell) + "/" + key("n", n);
    const std::string detail = "numeric " + fmt(row.numeric) + " vs closed form " + fmt(row.closed_form);
    if (n == 0 || kind == SystemKind::RadialOscillator) {
      out.checks.push_back(bound_check(name, abs_err, 1e-2, detail + ", absolute"));
    } else {
      const double tol = kind == SystemKind::HypDPT ? 1e-1 : 1e-2;
      out.checks.push_back(bound_check(name, abs_err / std::fabs(row.closed_form), tol, detail + ", relative"));
    }
  }
  return out;
}

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> all{
      {1, "cubic Laguerre identity, exact, ell 0..10", 10, c01},
      {2, "cubic Jacobi identity, exact, ell 0..8", 60, c02},
      {3, "lemmas A-D, exact, n 0..30", 5, c03},
      {4, "shape invariance, exact and pointwise, ell 1..6", 60, c04},
      {5, "trig and hyp reduce to the same identity, ell 1..4", 0, c05},
      {6, "xi ODE, exact, ell 0..6", 0, c06},
      {7, "xi positivity certificates, ell 0..6", 0, c07},
      {8, "oscillation: n zeros of P_{ell,n}", 0, c08},
      {9, "orthogonality under psi_ell^2", 60, c09},
      {10, "finite-difference spectra vs closed forms", 120, c10},
      {11, "Rodrigues collinearity, n 0..5", 0, c11},
      {12, "Jacobi to Laguerre limit at first order", 0, c12},
      {13, "potential invariant under xi rescaling", 0, c13},
  };
  return all;
}

bool CriterionResult::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Pass; });
}

CriterionResult run_criterion(const Criterion& c, bool quick, int jobs) {
  CriterionResult r;
  r.criterion = &c;
  const auto t0 = std::chrono::steady_clock::now();
  r.checks = run_tasks(c.tasks(quick), jobs);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char prefix[8];
  std::snprintf(prefix, sizeof prefix, "c%02d/", c.id);
  for (auto& ck : r.checks) ck.name = prefix + ck.name;
  if (c.budget_s > 0)
    r.checks.push_back(bound_check(std::string(prefix) + "runtime-seconds", r.seconds, c.budget_s, "wall clock"));
  return r;
}

}  // namespace xell
