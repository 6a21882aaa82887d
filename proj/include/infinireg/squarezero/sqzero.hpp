#pragma once

#include <string>
#include <vector>

#include "infinireg/algebra/ratfunc.hpp"

namespace infinireg {

/// Shape of A = Q(x_1..x_n) + I with I free on t_1..t_m and I^2 = 0.
struct RingSpec {
  int n = 1;
  int m = 1;
  VarNames xnames;
  VarNames tnames;

  static RingSpec make(int n, int m);
  const std::string& xname(int j) const { return xnames.at(static_cast<std::size_t>(j)); }
  const std::string& tname(int i) const { return tnames.at(static_cast<std::size_t>(i)); }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// An element sum_i v_i t_i of I, stored as its m coefficients.
using IVec = std::vector<RatFunc>;

IVec ivec_zero(int m);
bool ivec_is_zero(const IVec& v);
IVec ivec_add(const IVec& a, const IVec& b);
IVec ivec_sub(const IVec& a, const IVec& b);
IVec ivec_scale(const RatFunc& c, const IVec& v);
std::string ivec_to_string(const IVec& v, const RingSpec& spec);

/// u + sum v_i t_i in A.
struct SqZeroElement {
  RatFunc u;
  IVec v;

  static SqZeroElement base(const RatFunc& u, int m) { return {u, ivec_zero(m)}; }
  static SqZeroElement infinitesimal(const IVec& v) { return {RatFunc(), v}; }

  bool is_zero() const { return u.is_zero() && ivec_is_zero(v); }
  std::string to_string(const RingSpec& spec) const;

  friend bool operator==(const SqZeroElement&, const SqZeroElement&) = default;
  friend auto operator<=>(const SqZeroElement&, const SqZeroElement&) = default;
};

SqZeroElement operator+(const SqZeroElement& a, const SqZeroElement& b);
SqZeroElement operator-(const SqZeroElement& a, const SqZeroElement& b);
SqZeroElement operator-(const SqZeroElement& a);
SqZeroElement sq_mul(const SqZeroElement& a, const SqZeroElement& b);
inline SqZeroElement operator*(const SqZeroElement& a, const SqZeroElement& b) { return sq_mul(a, b); }
// Throws NON_UNIT when the base part vanishes.
SqZeroElement sq_inv(const SqZeroElement& a);
inline SqZeroElement operator/(const SqZeroElement& a, const SqZeroElement& b) { return a * sq_inv(b); }
// a and 1 - a are both units.
bool is_flat(const SqZeroElement& a);
// t_lambda(u + alpha) = u + lambda * alpha.
SqZeroElement scaling_endo(const Rational& lambda, const SqZeroElement& a);

}  // namespace infinireg
