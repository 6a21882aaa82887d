#pragma once

#include "infinireg/squarezero/splitting.hpp"

namespace infinireg {

/// A k-algebra map f: A_1 -> A_2 given by f(x_j) = p_j + phi_j and
/// f(t_i) = psi_i, so that
///   f(u, v) = (u(p), sum_j d_j u(p) phi_j + sum_i v_i(p) psi_i).
struct AlgebraHom {
  RingSpec source;
  RingSpec target;
  std::vector<RatFunc> px;
  std::vector<IVec> phix;
  std::vector<IVec> psit;

  static AlgebraHom identity(const RingSpec& spec);
  void validate() const;

  // u -> u(p); throws DENOMINATOR_VANISHES.
  RatFunc map_base(const RatFunc& u) const;
  // I-part of f(tau_0(u)).
  IVec base_shift(const RatFunc& u) const;
  IVec map_ivec(const IVec& v) const;

  std::string to_string() const;
};

SqZeroElement apply_hom(const AlgebraHom& f, const SqZeroElement& a);

// f' = c_{D2} o f o c_{D1}^{-1}: the same map written in split coordinates,
// so that tau_0 plays the role of tau_{D1} and tau_{D2}.
AlgebraHom hom_in_split_coords(const AlgebraHom& f, const Splitting& d1, const Splitting& d2);

}  // namespace infinireg
