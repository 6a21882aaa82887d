#include "infinireg/homotopy/homotopy.hpp"

#include "infinireg/symalg/forms.hpp"

namespace infinireg {

namespace {

void check_corrections(const std::vector<TruncSymElement>& corr, int expected, int target_m,
                       const char* what) {
  if (corr.empty()) return;
  if (static_cast<int>(corr.size()) != expected) {
    throw Error(ErrorCode::Precondition, std::string("wrong number of ") + what + " corrections");
  }
  for (const auto& c : corr) {
    for (const auto& [mono, coef] : c.terms()) {
      bool outside = false;
      for (int i = target_m; i < Monomial::kMaxVars; ++i) outside = outside || mono.exponent(i) > 0;
      if (mono.degree() < 2 || outside) {
        throw Error(ErrorCode::InvalidCorrectionDegree,
                    std::string(what) + " correction has a term of degree " + std::to_string(mono.degree()) +
                        (outside ? " in a generator outside the target" : ""));
      }
    }
  }
}

const TruncSymElement& correction(const std::vector<TruncSymElement>& corr, int k) {
  static const TruncSymElement zero;
  return corr.empty() ? zero : corr.at(static_cast<std::size_t>(k));
}

TruncSymElement ivec_elem(const IVec& v) { return TruncSymElement::from_ivec(v); }

void require_infinitesimal(const FWedgeSum& w) {
  if (!w.base_part_vanishes()) {
    throw Error(ErrorCode::NotInfinitesimal, "base part of the wedge sum does not vanish");
  }
}

}  // namespace

LiftedHom::LiftedHom(AlgebraHom f, LiftCorrections corrections)
    : hom_(std::move(f)), corrections_(std::move(corrections)) {
  hom_.validate();
  check_corrections(corrections_.x, hom_.source.n, hom_.target.m, "x");
  check_corrections(corrections_.t, hom_.source.m, hom_.target.m, "t");
}

TruncSymElement LiftedHom::image_x(int j) const {
  const auto ju = static_cast<std::size_t>(j);
  return TruncSymElement(hom_.px.at(ju)) + ivec_elem(hom_.phix.at(ju)) + correction(corrections_.x, j);
}

TruncSymElement LiftedHom::image_t(int i) const {
  return ivec_elem(hom_.psit.at(static_cast<std::size_t>(i))) + correction(corrections_.t, i);
}

TruncHom LiftedHom::as_trunc_hom() const {
  std::vector<TruncSymElement> xs;
  std::vector<TruncSymElement> ts;
  for (int j = 0; j < hom_.source.n; ++j) xs.push_back(image_x(j));
  for (int i = 0; i < hom_.source.m; ++i) ts.push_back(image_t(i));
  return TruncHom(std::move(xs), std::move(ts));
}

TruncSymElement LiftedHom::theta(const IVec& v) const {
  TruncSymElement out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const auto ii = static_cast<int>(i);
    out += ivec_elem(theta(v[i])) * ivec_elem(hom_.psit.at(i));
    out += correction(corrections_.t, ii).part(2).scaled(hom_.map_base(v[i]));
  }
  return out;
}

LiftedHom lift_hom(const AlgebraHom& f, const LiftCorrections& corrections) {
  return LiftedHom(f, corrections);
}

Sym3Class h_theta(const LiftedHom& lift, const FWedgeSum& w) {
  require_infinitesimal(w);
  const AlgebraHom& f = lift.hom();
  TruncSymElement total;
  for (const auto& [t, c] : w.terms()) {
    switch (t.kind) {
      case WedgeKind::G1: {
        const TruncSymElement value = ivec_elem(lift.degree_zero(t.alpha)) * lift.theta(t.beta) -
                                      lift.theta(t.alpha) * ivec_elem(lift.degree_zero(t.beta));
        total += value.scaled(RatFunc(c));
        break;
      }
      case WedgeKind::G2: {
        const RatFunc scale = f.map_base(t.right).inverse().scaled(-c);
        total += (lift.theta(t.alpha) * ivec_elem(lift.theta(t.right))).scaled(scale);
        break;
      }
      case WedgeKind::Base: break;
    }
  }
  return Sym3Class::from(total);
}

Sym3Class h_f(const LiftedHom& lift, const FWedgeSum& w) {
  return h_theta(lift, w).scaled(RatFunc(Rational(-3, 2)));
}

Sym3Class h_fhat(const LiftedHom& lift, std::span<const LiftedDifference> terms) {
  const TruncHom fhat = lift.as_trunc_hom();
  const Splitting source_zero(lift.hom().source.n, lift.hom().source.m);
  const Splitting target_zero(lift.hom().target.n, lift.hom().target.m);
  // Each difference is closed on its own; integrating termwise keeps the
  // denominators of different terms apart.
  Sym3Class total;
  for (const auto& t : terms) {
    const RelOneForm source_form = li2_difference_form(t.lift, t.base_lift, source_zero);
    const RelOneForm target_form = li2_difference_form(fhat.apply(t.lift), fhat.apply(t.base_lift), target_zero);
    const TruncSymElement pushed = fhat.apply(euler_antiderivative(source_form));
    total += Sym3Class::from(euler_antiderivative(target_form) - pushed).scaled(RatFunc(t.coef));
  }
  return total;
}

FWedgeSum wedge_to_split_coords(const Splitting& d, const FWedgeSum& w) {
  // tau_0(u) becomes tau_0(u)(1 + eps(u)) with eps(u) = -D(u)/u.
  auto eps = [&](const RatFunc& u) { return ivec_scale(u.inverse().scaled(-1), d.derive(u)); };
  FWedgeSum out;
  for (const auto& [t, c] : w.terms()) {
    switch (t.kind) {
      case WedgeKind::G1: out.add(t, c); break;
      case WedgeKind::G2:
        out.add(t, c);
        out.add(WedgeTerm::g1(t.alpha, eps(t.right)), c);
        break;
      case WedgeKind::Base: {
        const IVec el = eps(t.left);
        const IVec er = eps(t.right);
        out.add(t, c);
        out.add(WedgeTerm::g2(er, t.left), -c);
        out.add(WedgeTerm::g2(el, t.right), c);
        out.add(WedgeTerm::g1(el, er), c);
        break;
      }
    }
  }
  return out;
}

Sym3Class homotopy_h(const AlgebraHom& f, const Splitting& d1, const Splitting& d2,
                     const FWedgeSum& w, const LiftCorrections& corrections) {
  require_infinitesimal(w);
  const LiftedHom lift(hom_in_split_coords(f, d1, d2), corrections);
  return h_f(lift, wedge_to_split_coords(d1, w));
}

Sym3Class homotopy_hfhat(const AlgebraHom& f, const Splitting& d1, const Splitting& d2,
                         const InfBlochSum& s, const LiftCorrections& corrections) {
  const LiftedHom lift(hom_in_split_coords(f, d1, d2), corrections);
  // In split coordinates tau_0(u) + alpha becomes (u, alpha - D1(u)).
  std::vector<LiftedDifference> terms;
  for (const auto& [key, c] : s.terms()) {
    const auto& [u, alpha] = key;
    const IVec shift = d1.derive(u);
    const TruncSymElement base(u);
    terms.push_back({c, base + TruncSymElement::from_ivec(ivec_sub(alpha, shift)),
                     base - TruncSymElement::from_ivec(shift)});
  }
  return h_fhat(lift, terms);
}

BlochSum push_inf_bloch(const AlgebraHom& f, const InfBlochSum& s) {
  BlochSum out;
  for (const auto& [key, c] : s.terms()) {
    const auto& [u, alpha] = key;
    const SqZeroElement base = apply_hom(f, SqZeroElement::base(u, static_cast<int>(alpha.size())));
    const SqZeroElement moved{base.u, ivec_add(base.v, f.map_ivec(alpha))};
    out.add(moved, c);
    out.add(base, -c);
  }
  return out;
}

EqhomSides eqhom_sides(const AlgebraHom& f, const Splitting& d1, const Splitting& d2,
                       const InfBlochSum& s) {
  EqhomSides sides;
  sides.lhs = li2_first(push_inf_bloch(f, s), d2) - d1_pushforward(f, li2_first(s, d1));
  sides.rhs = homotopy_h(f, d1, d2, delta_inf(s));
  return sides;
}

bool eqhom_check(const AlgebraHom& f, const Splitting& d1, const Splitting& d2, const InfBlochSum& s) {
  const EqhomSides sides = eqhom_sides(f, d1, d2, s);
  return sides.lhs == sides.rhs;
}

}  // namespace infinireg
