#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "xell/rational.hpp"

namespace xell {

template <class R>
class Poly;

/// Per-ring operations the dense polynomial needs beyond + - * ==.
template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& a) { return a.is_zero(); }
  static Rational from_rational(const Rational& q) { return q; }
  static Rational scaled(const Rational& a, const Rational& q) { return a * q; }
  static void add_product(Rational& acc, const Rational& a, const Rational& b) {
    acc.add_product(a, b);
  }
  static Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
  static void append_numbers(const Rational& a, std::vector<Rational>& out) { out.push_back(a); }
  static std::string str(const Rational& a) { return a.str(); }
};

template <std::floating_point F>
struct ring_traits<F> {
  static F zero() { return F(0); }
  static F one() { return F(1); }
  static bool is_zero(F a) { return a == F(0); }
  static F from_rational(const Rational& q) {
    if constexpr (std::is_same_v<F, long double>) return q.to_long_double();
    else return static_cast<F>(q.to_double());
  }
  static F scaled(F a, const Rational& q) { return a * from_rational(q); }
  static void add_product(F& acc, F a, F b) { acc += a * b; }
  static F exact_quotient(F a, F b) { return a / b; }
  static std::string str(F a) {
    std::ostringstream os;
    os.precision(std::numeric_limits<F>::max_digits10);
    os << a;
    return os.str();
  }
};

/// Commutative ring with exact equality; Rational, double and nested Poly
/// qualify.
template <class R>
concept CoefficientRing = std::regular<R> && requires(const R& a, const R& b, R& acc) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { ring_traits<R>::zero() } -> std::convertible_to<R>;
  { ring_traits<R>::one() } -> std::convertible_to<R>;
  { ring_traits<R>::is_zero(a) } -> std::convertible_to<bool>;
  ring_traits<R>::add_product(acc, a, b);
};

class VariableMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Label of a combined expression.  An empty label marks a constant lifted
/// from the coefficient ring and is compatible with every variable.
inline std::string merge_variables(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty() || a == b) return a;
  throw VariableMismatch("polynomial variable mismatch: '" + a + "' vs '" + b + "'");
}

/// Dense univariate polynomial over R.  coeffs()[i] multiplies var^i.  The zero
/// polynomial has no coefficients and no degree.
template <class R>
class Poly {
 public:
  using Scalar = R;

  Poly() = default;
  explicit Poly(std::vector<R> coeffs, std::string var = {})
      : coeffs_(std::move(coeffs)), var_(std::move(var)) {
    normalize();
  }

  static Poly constant(const R& c, std::string var = {}) { return Poly({c}, std::move(var)); }
  static Poly variable(std::string var) {
    return Poly({ring_traits<R>::zero(), ring_traits<R>::one()}, std::move(var));
  }
  static Poly monomial(const R& c, std::size_t power, std::string var = {}) {
    std::vector<R> cs(power + 1, ring_traits<R>::zero());
    cs[power] = c;
    return Poly(std::move(cs), std::move(var));
  }

  [[nodiscard]] const std::vector<R>& coeffs() const { return coeffs_; }
  [[nodiscard]] const std::string& var() const { return var_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  [[nodiscard]] const R& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }
  [[nodiscard]] R coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : ring_traits<R>::zero();
  }

  /// Same coefficients under another variable label.
  [[nodiscard]] Poly renamed(std::string var) const {
    Poly p = *this;
    p.var_ = std::move(var);
    return p;
  }

  Poly& operator+=(const Poly& o) {
    var_ = merge_variables(var_, o.var_);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ring_traits<R>::zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    var_ = merge_variables(var_, o.var_);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ring_traits<R>::zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const R& c) {
    for (auto& a : coeffs_) a = a * c;
    normalize();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    r.var_ = merge_variables(a.var_, b.var_);
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, ring_traits<R>::zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (ring_traits<R>::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        ring_traits<R>::add_product(r.coeffs_[i + j], a.coeffs_[i], b.coeffs_[j]);
    }
    r.normalize();
    return r;
  }
  friend Poly operator*(Poly a, const R& c) { return a *= c; }
  friend Poly operator*(const R& c, Poly a) { return a *= c; }

  /// Coefficients equal and labels compatible (constants match any label).
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.coeffs_ != b.coeffs_) return false;
    if (a.coeffs_.size() <= 1) return true;
    return a.var_.empty() || b.var_.empty() || a.var_ == b.var_;
  }

  /// In-place accumulate a*b; used by the coefficient-ring multiply.
  static void add_product_into(Poly& acc, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return;
    acc.var_ = merge_variables(acc.var_, merge_variables(a.var_, b.var_));
    const std::size_t n = a.coeffs_.size() + b.coeffs_.size() - 1;
    if (acc.coeffs_.size() < n) acc.coeffs_.resize(n, ring_traits<R>::zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (ring_traits<R>::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        ring_traits<R>::add_product(acc.coeffs_[i + j], a.coeffs_[i], b.coeffs_[j]);
    }
    acc.normalize();
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && ring_traits<R>::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
  std::string var_;
};

template <class S>
struct ring_traits<Poly<S>> {
  static Poly<S> zero() { return Poly<S>(); }
  static Poly<S> one() { return Poly<S>::constant(ring_traits<S>::one()); }
  static bool is_zero(const Poly<S>& a) { return a.is_zero(); }
  static Poly<S> from_rational(const Rational& q) {
    return Poly<S>::constant(ring_traits<S>::from_rational(q));
  }
  static Poly<S> scaled(const Poly<S>& a, const Rational& q) {
    std::vector<S> cs;
    cs.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) cs.push_back(ring_traits<S>::scaled(c, q));
    return Poly<S>(std::move(cs), a.var());
  }
  static void add_product(Poly<S>& acc, const Poly<S>& a, const Poly<S>& b) {
    Poly<S>::add_product_into(acc, a, b);
  }
  static Poly<S> exact_quotient(const Poly<S>& a, const Poly<S>& b);
  static void append_numbers(const Poly<S>& a, std::vector<Rational>& out) {
    for (const auto& c : a.coeffs()) ring_traits<S>::append_numbers(c, out);
  }
  static std::string str(const Poly<S>& a);
};

// ---------------------------------------------------------------------------
// Free functions

/// Lift an exact rational constant into any coefficient ring.
template <class R>
R lift(const Rational& q) {
  return ring_traits<R>::from_rational(q);
}

/// Multiply every numeric coefficient (at every nesting depth) by q.
template <class R>
Poly<R> scaled(const Poly<R>& p, const Rational& q) {
  return ring_traits<Poly<R>>::scaled(p, q);
}

template <class R>
Poly<R> derivative(const Poly<R>& p) {
  if (p.coeffs().size() <= 1) return Poly<R>({}, p.var());
  std::vector<R> cs;
  cs.reserve(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i)
    cs.push_back(ring_traits<R>::scaled(p.coeffs()[i], Rational(static_cast<long>(i))));
  return Poly<R>(std::move(cs), p.var());
}

/// p(scale*x + offset), expanded.
template <class R>
Poly<R> substitute_affine(const Poly<R>& p, const R& scale, const R& offset) {
  const Poly<R> inner({offset, scale}, p.var());
  Poly<R> result({}, p.var());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    result = result * inner + Poly<R>::constant(*it, p.var());
  return result;
}

/// Horner evaluation in the coefficient ring.
template <class R>
R evaluate(const Poly<R>& p, const R& at) {
  R acc = ring_traits<R>::zero();
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * at + *it;
  return acc;
}

/// Horner evaluation in IEEE double.
inline double evaluate(const Poly<Rational>& p, double at) {
  double acc = 0.0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * at + it->to_double();
  return acc;
}

template <std::floating_point F>
Poly<F> to_float(const Poly<Rational>& p) {
  std::vector<F> cs;
  cs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) cs.push_back(ring_traits<F>::from_rational(c));
  return Poly<F>(std::move(cs), p.var());
}

inline Poly<double> to_double(const Poly<Rational>& p) { return to_float<double>(p); }

inline double evaluate(const Poly<double>& p, double at) {
  double acc = 0.0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * at + *it;
  return acc;
}

/// a(x)^k.
template <class R>
Poly<R> power(const Poly<R>& a, unsigned k) {
  Poly<R> r = Poly<R>::constant(ring_traits<R>::one(), a.var());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

/// Rising factorial a(a+1)...(a+k-1); the empty product is one.
template <class R>
R pochhammer(const R& a, int k) {
  if (k < 0) throw std::domain_error("pochhammer: negative length");
  R r = ring_traits<R>::one();
  for (int i = 0; i < k; ++i) r = r * (a + lift<R>(Rational(i)));
  return r;
}

template <class R>
struct DivMod {
  Poly<R> quotient;
  Poly<R> remainder;
};

/// Euclidean division over a field (Rational or double coefficients).
template <class R>
DivMod<R> divmod(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const std::string var = merge_variables(a.var(), b.var());
  std::vector<R> rem = a.coeffs();
  const std::size_t db = b.coeffs().size() - 1;
  if (rem.size() <= db) return {Poly<R>({}, var), Poly<R>(rem, var)};
  std::vector<R> quo(rem.size() - db, ring_traits<R>::zero());
  for (std::size_t k = rem.size(); k-- > db;) {
    if (ring_traits<R>::is_zero(rem[k])) continue;
    const R t = rem[k] / b.leading();
    quo[k - db] = t;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = rem[k - db + j] - t * b.coeffs()[j];
  }
  rem.resize(db);
  return {Poly<R>(std::move(quo), var), Poly<R>(std::move(rem), var)};
}

/// Division that must be exact in R[x]; recursive over nested rings.  Throws
/// std::domain_error when b does not divide a.
template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
  const std::string var = merge_variables(a.var(), b.var());
  Poly<R> rem = a.renamed(var);
  const std::size_t db = b.coeffs().size() - 1;
  std::vector<R> quo;
  while (!rem.is_zero()) {
    const std::size_t dr = rem.coeffs().size() - 1;
    if (dr < db) throw std::domain_error("exact_div: nonzero remainder");
    const R t = ring_traits<R>::exact_quotient(rem.leading(), b.leading());
    if (quo.size() < dr - db + 1) quo.resize(dr - db + 1, ring_traits<R>::zero());
    quo[dr - db] = t;
    rem -= Poly<R>::monomial(t, dr - db, var) * b;
    if (!rem.is_zero() && rem.coeffs().size() - 1 >= dr)
      throw std::domain_error("exact_div: leading term did not cancel");
  }
  return Poly<R>(std::move(quo), var);
}

/// Divide every coefficient by a ring element, exactly.
template <class R>
Poly<R> exact_div_scalar(const Poly<R>& a, const R& d) {
  std::vector<R> cs;
  cs.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) cs.push_back(ring_traits<R>::exact_quotient(c, d));
  return Poly<R>(std::move(cs), a.var());
}

template <class S>
Poly<S> ring_traits<Poly<S>>::exact_quotient(const Poly<S>& a, const Poly<S>& b) {
  return exact_div(a, b);
}

/// Every rational number stored in p, flattened over all nesting levels.
template <class R>
std::vector<Rational> flatten_numbers(const Poly<R>& p) {
  std::vector<Rational> out;
  ring_traits<Poly<R>>::append_numbers(p, out);
  return out;
}

template <class S>
std::string ring_traits<Poly<S>>::str(const Poly<S>& a) {
  if (a.is_zero()) return "0";
  const std::string var = a.var().empty() ? "x" : a.var();
  std::string out;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const auto& c = a.coeffs()[i];
    if (ring_traits<S>::is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    std::string cs = ring_traits<S>::str(c);
    if constexpr (!std::is_same_v<S, Rational> && !std::is_same_v<S, double>) cs = "(" + cs + ")";
    out += cs;
    if (i == 1) out += "*" + var;
    if (i > 1) out += "*" + var + "^" + std::to_string(i);
  }
  return out;
}

template <class R>
std::string to_string(const Poly<R>& p) {
  return ring_traits<Poly<R>>::str(p);
}

template <class R>
std::ostream& operator<<(std::ostream& os, const Poly<R>& p) {
  return os << to_string(p);
}

/// If a = c*b for a single nonzero rational c, return c.
inline std::optional<Rational> collinearity_ratio(const Poly<Rational>& a,
                                                  const Poly<Rational>& b) {
  if (a.is_zero() || b.is_zero() || a.coeffs().size() != b.coeffs().size()) return std::nullopt;
  const Rational c = a.leading() / b.leading();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    if (a.coeffs()[i] != c * b.coeffs()[i]) return std::nullopt;
  return c;
}

}  // namespace xell
