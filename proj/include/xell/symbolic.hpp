#pragma once

#include <string>

#include "xell/poly.hpp"

namespace xell::sym {

/// Q[a]: coefficients for one symbolic parameter.
using Univariate = Poly<Rational>;
/// Q[b][a]: outer variable a, coefficients in Q[b].
using Bivariate = Poly<Poly<Rational>>;

inline Univariate symbol(const std::string& name) { return Univariate::variable(name); }

/// The outer symbol of a bivariate ring.
inline Bivariate outer_symbol(const std::string& outer) {
  return Bivariate::variable(outer);
}

/// The inner symbol lifted to a constant of the outer ring.
inline Bivariate inner_symbol(const std::string& outer, const std::string& inner) {
  return Bivariate::constant(Univariate::variable(inner), outer);
}

}  // namespace xell::sym
