#pragma once

#include <span>

#include "infinireg/bloch/bloch.hpp"
#include "infinireg/regulator/regulator.hpp"
#include "infinireg/squarezero/hom.hpp"
#include "infinireg/symalg/truncsym.hpp"

namespace infinireg {

/// Degree 2..3 additions to the images of the generators under a lift.
/// Empty vectors mean zero corrections.
struct LiftCorrections {
  std::vector<TruncSymElement> x;
  std::vector<TruncSymElement> t;
};

/// Lift of f: A_1 -> A_2 to the truncated symmetric algebras (both over the
/// zero splitting): x_j -> p_j + phi_j + corr, t_i -> psi_i + corr.
class LiftedHom {
 public:
  // Throws INVALID_CORRECTION_DEGREE for a correction with terms below
  // degree 2 or in generators the target does not have.
  LiftedHom(AlgebraHom f, LiftCorrections corrections);

  const AlgebraHom& hom() const { return hom_; }
  const LiftCorrections& corrections() const { return corrections_; }

  TruncSymElement image_x(int j) const;
  TruncSymElement image_t(int i) const;
  TruncHom as_trunc_hom() const;

  // Degree-preserving part on I_1: sum_i v_i(p) psi_i.
  IVec degree_zero(const IVec& v) const { return hom_.map_ivec(v); }
  // Degree-raising part on the base: sum_j d_j r(p) phi_j.
  IVec theta(const RatFunc& r) const { return hom_.base_shift(r); }
  // Degree-raising part on I_1, landing in degree 2.
  TruncSymElement theta(const IVec& v) const;

 private:
  AlgebraHom hom_;
  LiftCorrections corrections_;
};

LiftedHom lift_hom(const AlgebraHom& f, const LiftCorrections& corrections = {});

// G1(a, b) -> f(a) theta(b) - theta(a) f(b); G2(a, u) -> -theta(a) theta(u)/f(u).
// Throws NOT_INFINITESIMAL unless the Base part vanishes.
Sym3Class h_theta(const LiftedHom& lift, const FWedgeSum& w);
Sym3Class h_f(const LiftedHom& lift, const FWedgeSum& w);

/// c ([lift] - [base_lift]) with lifts of degree <= 3 in the source.
struct LiftedDifference {
  Rational coef;
  TruncSymElement lift;
  TruncSymElement base_lift;
};

// The same map on delta of lifted differences, from its definition: the
// degree-3 part of E(L(delta f(xi))) - f(E(L(delta xi))), where L is
// -3 log° ^ dlog and E the Euler antiderivative, both over the zero splitting.
Sym3Class h_fhat(const LiftedHom& lift, std::span<const LiftedDifference> terms);

// Rewrites a wedge sum for the automorphism (u, v) -> (u, v - D(u)).
FWedgeSum wedge_to_split_coords(const Splitting& d, const FWedgeSum& w);

/// h_f(tau_1, tau_2) on a wedge sum written against the zero splitting of A_1.
Sym3Class homotopy_h(const AlgebraHom& f, const Splitting& d1, const Splitting& d2,
                     const FWedgeSum& w, const LiftCorrections& corrections = {});
// h_fhat on delta_inf(s), s written against the zero splitting of A_1.
Sym3Class homotopy_hfhat(const AlgebraHom& f, const Splitting& d1, const Splitting& d2,
                         const InfBlochSum& s, const LiftCorrections& corrections = {});

// Image f(s) = sum c ([f(u + alpha)] - [f(u)]); FLATNESS_VIOLATION if an
// image is not flat.
BlochSum push_inf_bloch(const AlgebraHom& f, const InfBlochSum& s);

struct EqhomSides {
  Sym3Class lhs;  // li2(f s, D2) - f_* li2(s, D1)
  Sym3Class rhs;  // h_f(tau_1, tau_2)(delta_inf s)
};

EqhomSides eqhom_sides(const AlgebraHom& f, const Splitting& d1, const Splitting& d2,
                       const InfBlochSum& s);
bool eqhom_check(const AlgebraHom& f, const Splitting& d1, const Splitting& d2, const InfBlochSum& s);

}  // namespace infinireg
