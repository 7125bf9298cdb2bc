#pragma once

#include <stdexcept>
#include <string>
#include <type_traits>

#include "xell/poly.hpp"

namespace xell {

/// Laguerre polynomial L_n^{(alpha)}(x) from its terminating hypergeometric
/// expansion.  n = -1 gives the zero polynomial.
template <class R>
Poly<R> laguerre_poly(int n, const R& alpha, const std::string& var = "x") {
  if (n < -1) throw std::invalid_argument("laguerre_poly: degree below -1");
  if (n == -1) return Poly<R>({}, var);
  // coefficient of x^k: (-1)^k C(n,k)/n! * (alpha+k+1)...(alpha+n)
  std::vector<R> cs(static_cast<std::size_t>(n) + 1, ring_traits<R>::zero());
  R tail = ring_traits<R>::one();
  const Rational inv_nfact = Rational(1) / factorial(n);
  for (int k = n; k >= 0; --k) {
    Rational c = binomial(n, k) * inv_nfact;
    if (k % 2 == 1) c = -c;
    cs[static_cast<std::size_t>(k)] = ring_traits<R>::scaled(tail, c);
    tail = tail * (alpha + lift<R>(Rational(k)));
  }
  return Poly<R>(std::move(cs), var);
}

namespace detail {

template <class R>
void check_jacobi_args(int n, const R& alpha) {
  if (n < -1) throw std::invalid_argument("jacobi_poly: degree below -1");
  if constexpr (std::is_same_v<R, Rational>) {
    if (n >= 0 && alpha.is_integer() && alpha.sign() < 0 && -alpha <= Rational(n))
      throw std::domain_error("jacobi_poly: alpha = " + alpha.str() +
                              " is a negative integer with |alpha| <= n");
  }
}

/// Coefficients c_k of P_n^{(alpha,beta)} = sum_k c_k y^k, y = (1-x)/2:
/// c_k = (-n)_k/(n! k!) * (alpha+k+1)...(alpha+n) * (n+alpha+beta+1)_k.
template <class R>
std::vector<R> jacobi_y_coefficients(int n, const R& alpha, const R& beta) {
  std::vector<R> tails(static_cast<std::size_t>(n) + 1, ring_traits<R>::one());
  for (int k = n - 1; k >= 0; --k)
    tails[static_cast<std::size_t>(k)] =
        tails[static_cast<std::size_t>(k) + 1] * (alpha + lift<R>(Rational(k + 1)));
  std::vector<R> cs;
  cs.reserve(static_cast<std::size_t>(n) + 1);
  const R base = alpha + beta + lift<R>(Rational(n + 1));
  R rising = ring_traits<R>::one();
  const Rational inv_nfact = Rational(1) / factorial(n);
  for (int k = 0; k <= n; ++k) {
    // (-n)_k / k! = (-1)^k C(n,k)
    Rational scalar = binomial(n, k) * inv_nfact;
    if (k % 2 == 1) scalar = -scalar;
    cs.push_back(ring_traits<R>::scaled(tails[static_cast<std::size_t>(k)] * rising, scalar));
    rising = rising * (base + lift<R>(Rational(k)));
  }
  return cs;
}

}  // namespace detail

/// Jacobi polynomial P_n^{(alpha,beta)}(x).  The (alpha+1)_n / (alpha+1)_k
/// ratio is carried as the product (alpha+k+1)...(alpha+n), so no ring
/// division occurs.  n = -1 gives the zero polynomial.
template <class R>
Poly<R> jacobi_poly(int n, const R& alpha, const R& beta, const std::string& var = "x") {
  detail::check_jacobi_args(n, alpha);
  if (n == -1) return Poly<R>({}, var);
  auto cs = detail::jacobi_y_coefficients(n, alpha, beta);
  // Horner in (1-x): coefficients of (1-x)^k are c_k / 2^k
  Rational pow2(1);
  for (auto& c : cs) {
    c = ring_traits<R>::scaled(c, pow2);
    pow2 /= Rational(2);
  }
  std::vector<R> acc{cs.back()};
  acc.reserve(cs.size());
  for (std::size_t k = cs.size() - 1; k-- > 0;) {
    acc.push_back(-acc.back());
    for (std::size_t i = acc.size() - 2; i >= 1; --i) acc[i] -= acc[i - 1];
    acc[0] += cs[k];
  }
  return Poly<R>(std::move(acc), var);
}

/// The same polynomial in the variable y = (1-x)/2, where the expansion is
/// native.  P(x) = Q((1-x)/2) for Q the returned polynomial.
template <class R>
Poly<R> jacobi_poly_in_y(int n, const R& alpha, const R& beta, const std::string& var = "y") {
  detail::check_jacobi_args(n, alpha);
  if (n == -1) return Poly<R>({}, var);
  return Poly<R>(detail::jacobi_y_coefficients(n, alpha, beta), var);
}

/// d/dx L_n^{(a)} + L_{n-1}^{(a+1)}; identically zero.
template <class R>
Poly<R> laguerre_forward_shift_residual(int n, const R& alpha) {
  return derivative(laguerre_poly(n, alpha)) + laguerre_poly(n - 1, alpha + lift<R>(1));
}

/// d/dx P_n^{(a,b)} - (n+a+b+1)/2 P_{n-1}^{(a+1,b+1)}; identically zero.
template <class R>
Poly<R> jacobi_forward_shift_residual(int n, const R& alpha, const R& beta) {
  const R one = lift<R>(1);
  const R factor = ring_traits<R>::scaled(alpha + beta + lift<R>(Rational(n + 1)), Rational(1, 2));
  return derivative(jacobi_poly(n, alpha, beta)) -
         jacobi_poly(n - 1, alpha + one, beta + one) * factor;
}

enum class Family { Laguerre, Jacobi };

/// Forward-shift residual with fully symbolic parameters; true when it is the
/// zero polynomial.
bool forward_shift_holds_symbolically(Family family, int n);

/// |P_n^{(alpha,beta)}(1 - 2x/beta) - L_n^{(alpha)}(x)|, computed exactly from
/// the binary values of beta and x and rounded once at the end.
double jacobi_laguerre_limit_error(int n, const Rational& alpha, double beta, double x);

}  // namespace xell
