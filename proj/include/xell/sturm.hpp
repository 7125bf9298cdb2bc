#pragma once

#include <vector>

#include "xell/poly.hpp"

namespace xell {

/// Interval endpoint that may sit at -inf or +inf.
struct Endpoint {
  enum class Kind { NegativeInfinity, Finite, PositiveInfinity };
  Kind kind = Kind::Finite;
  Rational value;

  static Endpoint negative_infinity() { return {Kind::NegativeInfinity, {}}; }
  static Endpoint positive_infinity() { return {Kind::PositiveInfinity, {}}; }
  static Endpoint at(Rational v) { return {Kind::Finite, std::move(v)}; }
};

/// Positive rational multiple of p with coprime integer coefficients.
Poly<Rational> primitive_part(const Poly<Rational>& p);

/// Square-free Sturm chain p0 = p/gcd(p,p'), p1 = p0', p_{k+1} = -rem(p_{k-1}, p_k),
/// each member rescaled by a positive constant.
std::vector<Poly<Rational>> sturm_chain(const Poly<Rational>& p);

/// Number of distinct real roots of p in the open interval (lo, hi).
/// Throws std::invalid_argument for the zero polynomial or an empty interval.
int sturm_count_roots(const Poly<Rational>& p, const Endpoint& lo, const Endpoint& hi);

Poly<Rational> polynomial_gcd(const Poly<Rational>& a, const Poly<Rational>& b);

}  // namespace xell
