#pragma once

#include "infinireg/bloch/bloch.hpp"
#include "infinireg/squarezero/hom.hpp"
#include "infinireg/symalg/forms.hpp"

namespace infinireg {

/// Closed form -1/2 (v - D(u))^3 / (u^2 (u - 1)^2) per generator (u, v).
Sym3Class li2_first(const BlochSum& s, const Splitting& d);
// Each term contributes value(u, alpha) - value(u, 0).
Sym3Class li2_first(const InfBlochSum& s, const Splitting& d);

/// -3 (log° ^ dlog) of the lifted delta, integrated by the Euler
/// antiderivative relative to the splitting; the degree-3 part.
Sym3Class li2_second(const InfBlochSum& s, const Splitting& d);

// -3 (log° ^ dlog)(delta([lift] - [base_lift])) relative to the splitting.
RelOneForm li2_difference_form(const TruncSymElement& lift, const TruncSymElement& base_lift,
                               const Splitting& d);

// One difference [lift] - [base_lift] with arbitrary lifts: both must be
// truncated elements whose degree-0 parts are units other than 1.
Sym3Class li2_second_term(const TruncSymElement& lift, const TruncSymElement& base_lift,
                          const Splitting& d);

// -1/2 (alpha + j)^3 and -1/2 alpha^3 agree modulo degree 4. j must have
// no terms below degree 2 (PRECONDITION otherwise).
bool li2_lift_perturbation_check(const RatFunc& u, const IVec& alpha, const TruncSymElement& j);

/// Induced map on the degree-3 classes: coefficients through x -> p, t_i -> psi_i.
Sym3Class d1_pushforward(const AlgebraHom& f, const Sym3Class& c);

}  // namespace infinireg
