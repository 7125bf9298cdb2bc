#include "xell/classical.hpp"

#include <cmath>

#include "xell/symbolic.hpp"

namespace xell {

bool forward_shift_holds_symbolically(Family family, int n) {
  if (family == Family::Laguerre)
    return laguerre_forward_shift_residual(n, sym::symbol("alpha")).is_zero();
  return jacobi_forward_shift_residual(n, sym::outer_symbol("alpha"),
                                       sym::inner_symbol("alpha", "beta"))
      .is_zero();
}

double jacobi_laguerre_limit_error(int n, const Rational& alpha, double beta, double x) {
  if (!(beta > 0.0)) throw std::invalid_argument("jacobi_laguerre_limit_error: beta must be > 0");
  if (n < 0) throw std::invalid_argument("jacobi_laguerre_limit_error: n must be >= 0");
  const Rational b = Rational::from_double(beta);
  const Rational xq = Rational::from_double(x);
  const Rational y = Rational(1) - Rational(2) * xq / b;
  const Rational jac = evaluate(jacobi_poly(n, alpha, b), y);
  const Rational lag = evaluate(laguerre_poly(n, alpha), xq);
  return std::fabs((jac - lag).to_double());
}

}  // namespace xell
