#include "xell/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace xell {

namespace {

// Three-term recurrence of the monic orthogonal polynomials:
// p_{k+1} = (x - alpha_k) p_k - beta_k p_{k-1}.
struct Recurrence {
  std::vector<double> alpha;  // size n
  std::vector<double> beta;   // beta[k] for k = 1..n-1 (beta[0] unused)
};

Recurrence recurrence(const WeightSpec& w, int n) {
  Recurrence r;
  r.alpha.resize(static_cast<std::size_t>(n));
  r.beta.assign(static_cast<std::size_t>(n), 0.0);
  const double a = w.a, b = w.b;
  for (int k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (w.family == WeightFamily::Laguerre) {
      r.alpha[i] = 2.0 * k + a + 1.0;
      if (k > 0) r.beta[i] = k * (k + a);
      continue;
    }
    const double s = 2.0 * k + a + b;
    r.alpha[i] = k == 0 ? (b - a) / (a + b + 2.0) : (b * b - a * a) / (s * (s + 2.0));
    if (k == 1) {
      r.beta[i] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
    } else if (k > 1) {
      r.beta[i] = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0));
    }
  }
  return r;
}

// log of sum_{k<n} phat_k(x)^2 for the orthonormal polynomials, plus the
// ratio phat_n / phat_n' for a Newton step.  Rescales to stay finite.
struct ChristoffelEval {
  double log_sum;
  double newton_step;
};

ChristoffelEval christoffel(const Recurrence& r, double log_mu0, double x) {
  const std::size_t n = r.alpha.size();
  double p_prev = 0.0, p = 1.0;    // unscaled phat_0 = 1/sqrt(mu0) folded into log_scale
  double d_prev = 0.0, d = 0.0;
  double log_scale = -0.5 * log_mu0;
  double sum = 0.0;                // in units of exp(2 log_scale)
  for (std::size_t k = 0; k < n; ++k) {
    sum += p * p;
    const double sb_next = k + 1 < n ? std::sqrt(r.beta[k + 1]) : 1.0;
    const double sb = k > 0 ? std::sqrt(r.beta[k]) : 0.0;
    const double p_next = ((x - r.alpha[k]) * p - sb * p_prev) / sb_next;
    const double d_next = (p + (x - r.alpha[k]) * d - sb * d_prev) / sb_next;
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
    const double mag = std::max({std::fabs(p), std::fabs(p_prev), std::sqrt(sum)});
    if (mag > 1e100) {
      const double f = 1.0 / mag;
      p *= f, p_prev *= f, d *= f, d_prev *= f;
      sum *= f * f;
      log_scale += std::log(mag);
    }
  }
  // p is proportional to the degree-n polynomial, whose zeros are the nodes
  return {std::log(sum) + 2.0 * log_scale, d != 0.0 ? p / d : 0.0};
}

}  // namespace

double weight_mass(const WeightSpec& w) {
  if (w.family == WeightFamily::Laguerre) return std::tgamma(w.a + 1.0);
  return std::exp((w.a + w.b + 1.0) * std::log(2.0) + std::lgamma(w.a + 1.0) +
                  std::lgamma(w.b + 1.0) - std::lgamma(w.a + w.b + 2.0));
}

QuadratureRule gauss_rule(const WeightSpec& weight, int order) {
  if (order < 1) throw std::invalid_argument("gauss_rule: order must be >= 1");
  if (!(weight.a > -1.0) || (weight.family == WeightFamily::Jacobi && !(weight.b > -1.0)))
    throw std::invalid_argument("gauss_rule: weight parameters must exceed -1");
  const Recurrence r = recurrence(weight, order);
  Eigen::VectorXd diag(order), sub(std::max(order - 1, 0));
  for (int k = 0; k < order; ++k) diag(k) = r.alpha[static_cast<std::size_t>(k)];
  for (int k = 1; k < order; ++k) sub(k - 1) = std::sqrt(r.beta[static_cast<std::size_t>(k)]);

  Eigen::VectorXd eig;
  if (order == 1) {
    eig = diag;
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    // bounded retries: Eigen reports NoConvergence on pathological input
    for (int attempt = 0; attempt < 2; ++attempt) {
      solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
      if (solver.info() == Eigen::Success) break;
    }
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("gauss_rule: tridiagonal eigen-iteration did not converge");
    eig = solver.eigenvalues();
  }

  const double log_mu0 = std::log(weight_mass(weight));
  QuadratureRule rule;
  rule.weight = weight;
  rule.order = order;
  for (int i = 0; i < order; ++i) {
    double x = eig(i);
    const auto polish = christoffel(r, log_mu0, x);
    if (std::fabs(polish.newton_step) < 1e-6 * (1.0 + std::fabs(x))) x -= polish.newton_step;
    const auto c = christoffel(r, log_mu0, x);
    rule.nodes.push_back(x);
    rule.weights.push_back(std::exp(-c.log_sum));
    rule.log_weights.push_back(-c.log_sum);
  }
  std::vector<std::size_t> idx(rule.nodes.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](auto i, auto j) { return rule.nodes[i] < rule.nodes[j]; });
  QuadratureRule sorted = rule;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    sorted.nodes[i] = rule.nodes[idx[i]];
    sorted.weights[i] = rule.weights[idx[i]];
    sorted.log_weights[i] = rule.log_weights[idx[i]];
  }
  return sorted;
}

double GramMatrix::max_off_diagonal() const {
  double m = 0.0;
  for (Eigen::Index i = 0; i < normalized.rows(); ++i)
    for (Eigen::Index j = 0; j < normalized.cols(); ++j)
      if (i != j) m = std::max(m, std::fabs(normalized(i, j)));
  return m;
}

double GramMatrix::min_diagonal() const {
  return raw.rows() == 0 ? 0.0 : raw.diagonal().minCoeff();
}

namespace {

// Integration plan for one system: a Gauss weight in some variable u, the map
// u -> eta, and a smooth positive factor multiplying P_n P_m / xi^2.
struct GramPlan {
  WeightSpec weight;
  std::string method;
  double (*to_eta)(double u);
  double (*extra_log)(double u, double c);  // log of the smooth extra factor
  double c = 0.0;
};

GramPlan gram_plan(SystemKind kind, int ell, const Params& p, int n_max) {
  const auto dp = to_double(p);
  const double g = dp.g + ell, h = dp.h;
  switch (kind) {
    case SystemKind::RadialOscillator:
      return {{WeightFamily::Laguerre, g - 0.5, 0.0},
              "eta, Gauss-Laguerre weight eta^(g+l-1/2) e^-eta",
              [](double u) { return u; },
              [](double, double) { return 0.0; }};
    case SystemKind::TrigDPT:
      return {{WeightFamily::Jacobi, g - 0.5, h + ell - 0.5},
              "eta, Gauss-Jacobi weight (1-eta)^(g+l-1/2) (1+eta)^(h+l-1/2)",
              [](double u) { return u; },
              [](double, double) { return 0.0; }};
    case SystemKind::HypDPT: {
      // eta = 1 + 2t/(1-t), t = (1+u)/2: the measure becomes
      // t^(g'-1/2) (1-t)^(h'-g'-1) dt with g' = g+l, h' = h-l.  The
      // (1-t)^(2 n_max) needed to tame P_n P_m / xi^2 at t -> 1 is moved
      // into the smooth factor.
      const double hp = h - ell;
      const double a = hp - g - 1.0 - 2.0 * n_max;
      if (!(a > -1.0))
        throw ConstraintViolation("hyperbolic Gram: need n_max < (h-g)/2 - ell for square integrability");
      GramPlan plan{{WeightFamily::Jacobi, a, g - 0.5},
                    "t = (eta-1)/(eta+1), Gauss-Jacobi in 2t-1 with (1-t)^(2 n_max) moved into the integrand",
                    [](double u) {
                      const double t = 0.5 * (1.0 + u);
                      return 1.0 + 2.0 * t / (1.0 - t);
                    },
                    [](double u, double c) { return c * std::log(0.5 * (1.0 - u)); }};
      plan.c = 2.0 * n_max;
      return plan;
    }
  }
  throw std::logic_error("gram_plan: unknown system");
}

Eigen::MatrixXd raw_gram(const GramPlan& plan, const std::vector<Poly<double>>& polys,
                         const Poly<double>& xi, int order) {
  const auto rule = gauss_rule(plan.weight, order);
  const auto n = static_cast<Eigen::Index>(polys.size());
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd vals(n);
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double u = rule.nodes[q];
    const double eta = plan.to_eta(u);
    const double x = evaluate(xi, eta);
    const double base = rule.weights[q] * std::exp(plan.extra_log(u, plan.c)) / (x * x);
    if (base == 0.0 || !std::isfinite(base)) continue;
    for (Eigen::Index i = 0; i < n; ++i) vals(i) = evaluate(polys[static_cast<std::size_t>(i)], eta);
    G.noalias() += base * vals * vals.transpose();
  }
  return G;
}

Eigen::MatrixXd normalize(const Eigen::MatrixXd& G) {
  Eigen::MatrixXd N = G;
  for (Eigen::Index i = 0; i < G.rows(); ++i)
    for (Eigen::Index j = 0; j < G.cols(); ++j) N(i, j) = G(i, j) / std::sqrt(G(i, i) * G(j, j));
  return N;
}

}  // namespace

GramMatrix orthogonality_gram(SystemKind kind, int ell, const Params& p, int n_max,
                              int start_order) {
  check_admissible(kind, p, ell);
  if (n_max < 0) throw std::invalid_argument("orthogonality_gram: n_max must be >= 0");
  const GramPlan plan = gram_plan(kind, ell, p, n_max);
  std::vector<Poly<double>> polys;
  for (int n = 0; n <= n_max; ++n) polys.push_back(to_double(xell_poly(kind, ell, n, p).poly));
  const Poly<double> xi = to_double(xi_poly(kind, ell, p));

  constexpr int kMaxOrder = 4096;
  int order = std::max(start_order, n_max + ell + 2);
  Eigen::MatrixXd prev = raw_gram(plan, polys, xi, order);
  for (;;) {
    const int next_order = order * 2;
    if (next_order > kMaxOrder)
      throw std::runtime_error("orthogonality_gram: no convergence by order " + std::to_string(kMaxOrder));
    Eigen::MatrixXd cur = raw_gram(plan, polys, xi, next_order);
    const Eigen::MatrixXd nc = normalize(cur), np = normalize(prev);
    double change = (nc - np).cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < cur.rows(); ++i)
      change = std::max(change, std::fabs(cur(i, i) - prev(i, i)) / std::fabs(cur(i, i)));
    order = next_order;
    prev = cur;
    if (change < 1e-10) {
      GramMatrix out;
      out.raw = cur;
      out.normalized = nc;
      out.n_max = n_max;
      out.order = order;
      out.last_change = change;
      out.method = plan.method;
      return out;
    }
  }
}

Grid default_grid(SystemKind kind) {
  switch (kind) {
    case SystemKind::RadialOscillator: return {1e-3, 12.0, 4000};
    case SystemKind::TrigDPT: return {1e-4, std::numbers::pi / 2 - 1e-4, 4000};
    case SystemKind::HypDPT: return {1e-3, 8.0, 4000};
  }
  return {};
}

namespace {

// Number of eigenvalues of T strictly below x (negative pivots of T - x I).
int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x) {
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double off = i > 0 ? e[i - 1] * e[i - 1] : 0.0;
    q = d[i] - x - (i > 0 ? off / q : 0.0);
    if (q == 0.0) q = -std::numeric_limits<double>::epsilon() * (std::fabs(d[i]) + std::fabs(x) + 1.0);
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

std::vector<double> tridiagonal_lowest(const std::vector<double>& d, const std::vector<double>& e,
                                       int k) {
  if (d.empty() || k < 1) return {};
  if (e.size() + 1 != d.size()) throw std::invalid_argument("tridiagonal_lowest: size mismatch");
  // Gershgorin bounds
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double r = (i > 0 ? std::fabs(e[i - 1]) : 0.0) + (i < e.size() ? std::fabs(e[i]) : 0.0);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  const int want = std::min<int>(k, static_cast<int>(d.size()));
  std::vector<double> out;
  double floor = lo;
  for (int j = 0; j < want; ++j) {
    // smallest x with count(x) > j
    double a = floor, b = hi;
    for (int it = 0; it < 200 && b - a > 1e-13 * std::max(1.0, std::fabs(a) + std::fabs(b)); ++it) {
      const double mid = 0.5 * (a + b);
      if (sturm_count(d, e, mid) > j) b = mid;
      else a = mid;
    }
    out.push_back(0.5 * (a + b));
    floor = a;
  }
  return out;
}

namespace {

std::vector<double> fd_levels(const DeformedPrepotential& w, const Grid& grid, int k) {
  const int interior = grid.points - 2;
  const double h = (grid.x_hi - grid.x_lo) / (grid.points - 1);
  std::vector<double> d(static_cast<std::size_t>(interior)), e(static_cast<std::size_t>(interior - 1), -1.0 / (h * h));
  for (int i = 0; i < interior; ++i)
    d[static_cast<std::size_t>(i)] = 2.0 / (h * h) + w.potential(grid.x_lo + (i + 1) * h);
  return tridiagonal_lowest(d, e, k);
}

}  // namespace

FdSpectrum fd_spectrum(SystemKind kind, int ell, const Params& p, const Grid& grid, int k,
                       double tolerance) {
  check_admissible(kind, p, ell);
  if (grid.points < 3) throw std::invalid_argument("fd_spectrum: grid needs at least 3 points");
  if (!strictly_inside(kind, grid.x_lo) || !strictly_inside(kind, grid.x_hi) || !(grid.x_lo < grid.x_hi))
    throw std::invalid_argument("fd_spectrum: grid must lie strictly inside the domain");
  if (k < 1 || k > grid.points - 2) throw std::invalid_argument("fd_spectrum: bad level count");
  const DeformedPrepotential w(kind, ell, p);
  FdSpectrum out;
  out.grid = grid;
  out.eigenvalues = fd_levels(w, grid, k);
  const Grid fine{grid.x_lo, grid.x_hi, 2 * grid.points - 1};
  out.refined = fd_levels(w, fine, k);
  for (std::size_t i = 0; i < out.eigenvalues.size(); ++i) {
    const double moved = std::fabs(out.refined[i] - out.eigenvalues[i]);
    if (moved > 10.0 * tolerance * std::max(1.0, std::fabs(out.refined[i])))
      throw std::runtime_error("fd_spectrum: grid too coarse, level " + std::to_string(i) +
                               " moved by " + std::to_string(moved) + " at half spacing");
  }
  return out;
}

std::vector<std::pair<int, int>> zero_count_report(SystemKind kind, int ell, const Params& p,
                                                   int n_max) {
  check_admissible(kind, p, ell);
  const auto dom = eta_domain(kind);
  std::vector<std::pair<int, int>> out;
  for (int n = 0; n <= n_max; ++n)
    out.emplace_back(n, sturm_count_roots(xell_poly(kind, ell, n, p).poly, dom.lo, dom.hi));
  return out;
}

}  // namespace xell
