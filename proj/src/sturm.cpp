#include "xell/sturm.hpp"

#include <stdexcept>

namespace xell {

Poly<Rational> primitive_part(const Poly<Rational>& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm = 1;
  for (const auto& c : p.coeffs())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.mpq().get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    mpz_class scaled_num = c.mpq().get_num() * (den_lcm / c.mpq().get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
  }
  const Rational factor(mpq_class(den_lcm, num_gcd));
  return p * factor;
}

Poly<Rational> polynomial_gcd(const Poly<Rational>& a, const Poly<Rational>& b) {
  Poly<Rational> x = a, y = b;
  while (!y.is_zero()) {
    Poly<Rational> r = divmod(x, y).remainder;
    x = std::move(y);
    y = primitive_part(r);
  }
  if (x.is_zero()) return x;
  return x * (Rational(1) / x.leading());
}

std::vector<Poly<Rational>> sturm_chain(const Poly<Rational>& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  Poly<Rational> g = polynomial_gcd(p, derivative(p));
  Poly<Rational> p0 = primitive_part(divmod(p, g).quotient);
  if (p0.leading().sign() < 0) p0 = -p0;
  std::vector<Poly<Rational>> chain{p0};
  Poly<Rational> p1 = primitive_part(derivative(p0));
  if (p1.is_zero()) return chain;
  if (p1.leading().sign() < 0) p1 = -p1;  // positive rescaling of p0'
  chain.push_back(p1);
  while (true) {
    Poly<Rational> r = divmod(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    chain.push_back(-primitive_part(r));
  }
  return chain;
}

namespace {

int sign_at(const Poly<Rational>& q, const Endpoint& e) {
  switch (e.kind) {
    case Endpoint::Kind::PositiveInfinity:
      return q.leading().sign();
    case Endpoint::Kind::NegativeInfinity: {
      const int s = q.leading().sign();
      return (q.coeffs().size() - 1) % 2 == 0 ? s : -s;
    }
    case Endpoint::Kind::Finite:
      return evaluate(q, e.value).sign();
  }
  return 0;
}

int sign_changes(const std::vector<Poly<Rational>>& chain, const Endpoint& e) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sign_at(q, e);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

bool less(const Endpoint& a, const Endpoint& b) {
  using K = Endpoint::Kind;
  if (a.kind == K::PositiveInfinity || b.kind == K::NegativeInfinity) return false;
  if (a.kind == K::NegativeInfinity || b.kind == K::PositiveInfinity) return true;
  return a.value < b.value;
}

}  // namespace

int sturm_count_roots(const Poly<Rational>& p, const Endpoint& lo, const Endpoint& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count_roots: zero polynomial");
  if (!less(lo, hi)) throw std::invalid_argument("sturm_count_roots: empty interval");
  const auto chain = sturm_chain(p);
  // V(lo) - V(hi) counts roots in (lo, hi]; drop a root sitting exactly at hi.
  int count = sign_changes(chain, lo) - sign_changes(chain, hi);
  if (hi.kind == Endpoint::Kind::Finite && evaluate(chain.front(), hi.value).is_zero()) --count;
  return count;
}

}  // namespace xell
