#include "infinireg/regulator/regulator.hpp"

namespace infinireg {

namespace {

RatFunc li2_weight(const RatFunc& u) {
  if (u.is_zero() || u.is_one()) {
    throw Error(ErrorCode::FlatnessViolation, "argument " + u.to_string() + " is not flat");
  }
  const RatFunc w = u * (u - 1);
  return (w * w).inverse().scaled(Rational(-1, 2));
}

RelOneForm lifted_log_dlog(const TruncSymElement& lift, const Splitting& d) {
  return log_wedge_dlog(TruncSymElement(1) - lift, lift, d);
}

void require_unit_lift(const TruncSymElement& e) {
  const RatFunc c = e.constant();
  if (c.is_zero() || c.is_one()) {
    throw Error(ErrorCode::FlatnessViolation, "lift with base part " + c.to_string() + " is not flat");
  }
}

}  // namespace

RelOneForm li2_difference_form(const TruncSymElement& lift, const TruncSymElement& base_lift,
                               const Splitting& d) {
  return (lifted_log_dlog(lift, d) - lifted_log_dlog(base_lift, d)).times(TruncSymElement(-3));
}

Sym3Class li2_first(const BlochSum& s, const Splitting& d) {
  Sym3Class out;
  for (const auto& [a, c] : s.terms()) {
    const IVec rel = ivec_sub(a.v, d.derive(a.u));
    out += Sym3Class::cube(rel).scaled(li2_weight(a.u).scaled(c));
  }
  return out;
}

Sym3Class li2_first(const InfBlochSum& s, const Splitting& d) {
  Sym3Class out;
  for (const auto& [key, c] : s.terms()) {
    const auto& [u, alpha] = key;
    const IVec shift = d.derive(u);
    const Sym3Class diff = Sym3Class::cube(ivec_sub(alpha, shift)) - Sym3Class::cube(ivec_scale(-1, shift));
    out += diff.scaled(li2_weight(u).scaled(c));
  }
  return out;
}

Sym3Class li2_second_term(const TruncSymElement& lift, const TruncSymElement& base_lift,
                          const Splitting& d) {
  require_unit_lift(lift);
  require_unit_lift(base_lift);
  return Sym3Class::from(euler_antiderivative(li2_difference_form(lift, base_lift, d), d));
}

Sym3Class li2_second(const InfBlochSum& s, const Splitting& d) {
  RelOneForm total(d.m());
  for (const auto& [key, c] : s.terms()) {
    const auto& [u, alpha] = key;
    const TruncSymElement base_lift(u);
    const TruncSymElement lift = base_lift + TruncSymElement::from_ivec(alpha);
    total += li2_difference_form(lift, base_lift, d).times(TruncSymElement(RatFunc(Rational(c))));
  }
  return Sym3Class::from(euler_antiderivative(total, d));
}

bool li2_lift_perturbation_check(const RatFunc& u, const IVec& alpha, const TruncSymElement& j) {
  if (j.min_degree() < 2) {
    throw Error(ErrorCode::Precondition, "lift perturbation must have degree at least 2");
  }
  const TruncSymElement a = TruncSymElement::from_ivec(alpha);
  const TruncSymElement moved = a + j;
  const RatFunc weight = li2_weight(u);
  return Sym3Class::from(moved * moved * moved).scaled(weight) ==
         Sym3Class::from(a * a * a).scaled(weight);
}

Sym3Class d1_pushforward(const AlgebraHom& f, const Sym3Class& c) {
  Sym3Class out;
  for (const auto& [mono, coef] : c.terms()) {
    std::vector<const IVec*> factors;
    for (int i = 0; i < Monomial::kMaxVars; ++i) {
      for (unsigned e = 0; e < mono.exponent(i); ++e) factors.push_back(&f.psit.at(static_cast<std::size_t>(i)));
    }
    if (factors.size() != 3) throw Error(ErrorCode::Internal, "degree-3 class with a non-cubic monomial");
    out += Sym3Class::product(*factors[0], *factors[1], *factors[2]).scaled(f.map_base(coef));
  }
  return out;
}

}  // namespace infinireg
