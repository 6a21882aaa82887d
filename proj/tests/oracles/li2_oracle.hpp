#pragma once

#include "infinireg/regulator/regulator.hpp"

namespace oracle {

using namespace infinireg;

// -1/2 (lift - tau_D(u))^3 / (lift^2 (lift - 1)^2) computed in the truncated
// symmetric algebra, with tau_D(u) from the shift automorphism and the
// denominator inverted as a series.
inline Sym3Class li2_series(const SqZeroElement& a, const Splitting& d) {
  const TruncSymElement lift = TruncSymElement::lift(a);
  const TruncSymElement diff = lift - TruncHom::shift(d).apply(a.u);
  const TruncSymElement one(1);
  const TruncSymElement den = lift * lift * (lift - one) * (lift - one);
  return Sym3Class::from(diff * diff * diff * den.inverse() * TruncSymElement(RatFunc(Rational(-1, 2))));
}

inline Sym3Class li2_series(const BlochSum& s, const Splitting& d) {
  Sym3Class out;
  for (const auto& [a, c] : s.terms()) out += li2_series(a, d).scaled(RatFunc(c));
  return out;
}

// Sum of the five cubes of the functional-equation identity over Q(a, b):
// with A = t1, B = t2,
//   A^3/(a(a-1))^2 - B^3/(b(b-1))^2 + (aB - bA)^3/(ab(a-b))^2
//   - (b(b-1)A - a(a-1)B)^3/(ab(a-1)(b-1)(a-b))^2 + ((b-1)A - (a-1)B)^3/((a-1)(b-1)(a-b))^2.
inline Sym3Class five_cube_identity() {
  const RatFunc a = RatFunc::variable(0);
  const RatFunc b = RatFunc::variable(1);
  const RatFunc one(1);
  auto cube_over = [](const RatFunc& ca, const RatFunc& cb, const RatFunc& den) {
    return Sym3Class::cube({ca, cb}).scaled((den * den).inverse());
  };
  Sym3Class sum = cube_over(one, 0, a * (a - 1));
  sum -= cube_over(0, one, b * (b - 1));
  sum += cube_over(-b, a, a * b * (a - b));
  sum -= cube_over(b * (b - 1), -(a * (a - 1)), a * b * (a - 1) * (b - 1) * (a - b));
  sum += cube_over(b - 1, -(a - 1), (a - 1) * (b - 1) * (a - b));
  return sum;
}

}  // namespace oracle
