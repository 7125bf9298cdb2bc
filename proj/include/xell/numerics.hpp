#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "xell/systems.hpp"

namespace xell {

enum class WeightFamily {
  Laguerre,  ///< x^a e^{-x} on (0, inf)
  Jacobi,    ///< (1-x)^a (1+x)^b on (-1, 1)
};

struct WeightSpec {
  WeightFamily family = WeightFamily::Jacobi;
  double a = 0.0;
  double b = 0.0;
};

struct QuadratureRule {
  std::vector<double> nodes;    ///< ascending
  std::vector<double> weights;  ///< positive, but underflow to 0 far out on (0, inf)
  std::vector<double> log_weights;
  WeightSpec weight;
  int order = 0;
};

/// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix (Eigen's
/// tridiagonal solver, then one Newton polish on the recurrence), weights come
/// from the Christoffel sum 1 / sum_k p_k(x)^2 of the orthonormal polynomials,
/// which avoids eigenvectors and stays O(order^2).
QuadratureRule gauss_rule(const WeightSpec& weight, int order);

/// Total mass of the weight, mu_0.
double weight_mass(const WeightSpec& weight);

struct GramMatrix {
  Eigen::MatrixXd raw;         ///< integrals of psi^2 P_n P_m, up to a positive constant
  Eigen::MatrixXd normalized;  ///< raw(n,m) / sqrt(raw(n,n) raw(m,m))
  int n_max = 0;
  int order = 0;               ///< quadrature order at convergence
  double last_change = 0.0;    ///< largest entry change in the final doubling
  std::string method;          ///< integration variable and weight used
  [[nodiscard]] double max_off_diagonal() const;
  [[nodiscard]] double min_diagonal() const;
};

/// Orthogonality integrals of P_{ell,0..n_max}.  The order doubles from
/// start_order until every normalized entry and every relative diagonal moves
/// by less than 1e-10; beyond order 4096 throws std::runtime_error.
GramMatrix orthogonality_gram(SystemKind kind, int ell, const Params& p, int n_max,
                              int start_order = 32);

struct Grid {
  double x_lo = 0.0;
  double x_hi = 0.0;
  int points = 0;  ///< including both Dirichlet end points
};

/// Default grid: radial (1e-3, 12, 4000), trig (1e-4, pi/2 - 1e-4, 4000),
/// hyp (1e-3, 8, 4000).
Grid default_grid(SystemKind kind);

/// Lowest k eigenvalues of the symmetric tridiagonal matrix with diagonal d
/// and off-diagonal e, by bisection on the Sturm count.
std::vector<double> tridiagonal_lowest(const std::vector<double>& d, const std::vector<double>& e,
                                       int k);

struct FdSpectrum {
  std::vector<double> eigenvalues;  ///< on the requested grid
  std::vector<double> refined;      ///< same levels at half spacing
  Grid grid;
};

/// k lowest eigenvalues of -d^2/dx^2 + U_ell on the grid (3-point Laplacian,
/// Dirichlet ends).  Throws std::runtime_error when the half-spacing rerun
/// moves a level by more than 10 * tolerance * max(1, |E|).
FdSpectrum fd_spectrum(SystemKind kind, int ell, const Params& p, const Grid& grid, int k,
                       double tolerance = 1e-2);

/// (n, number of roots of P_{ell,n} inside the eta domain) for n = 0..n_max.
std::vector<std::pair<int, int>> zero_count_report(SystemKind kind, int ell, const Params& p,
                                                   int n_max);

}  // namespace xell
