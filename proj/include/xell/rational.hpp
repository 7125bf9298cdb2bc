#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace xell {

/// Exact rational number backed by GMP; always in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I n) : value_(static_cast<long>(n)) {}  // NOLINT(implicit)

  Rational(long num, long den);
  explicit Rational(mpq_class value);

  /// Accepts "p", "p/q", decimal literals ("0.125", "-3.5e-2").  Decimals are
  /// converted exactly.
  static Rational parse(std::string_view text);

  /// Exact binary value of a finite double.
  static Rational from_double(double x);

  [[nodiscard]] double to_double() const { return value_.get_d(); }
  /// Two-term split hi + lo, so the result is correct to long double precision.
  [[nodiscard]] long double to_long_double() const;
  [[nodiscard]] std::string str() const { return value_.get_str(); }
  [[nodiscard]] std::string numerator_str() const;
  [[nodiscard]] std::string denominator_str() const;

  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] Rational floor() const;
  [[nodiscard]] Rational abs() const;

  [[nodiscard]] const mpq_class& mpq() const { return value_; }
  mpq_class& mpq() { return value_; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  /// acc += a * b without allocating a temporary.
  void add_product(const Rational& a, const Rational& b);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// n! as an exact rational.
Rational factorial(int n);
/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
Rational binomial(int n, int k);

}  // namespace xell
