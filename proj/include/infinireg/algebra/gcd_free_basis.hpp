#pragma once

#include <span>
#include <string>
#include <vector>

#include "infinireg/algebra/ratfunc.hpp"

namespace infinireg {

/// Pairwise-coprime, square-free monic polynomials together with pairwise
/// coprime integers (primes, or unfactored coprime cofactors) such that every
/// input factors as +-(prod ints^e)(prod polys^e). Exponent vectors list the
/// integer part first, then the polynomial part.
class GcdFreeBasis {
 public:
  GcdFreeBasis() = default;

  static GcdFreeBasis build(std::span<const Poly> inputs);
  // Collects numerators and denominators of the given rational functions.
  static GcdFreeBasis build(std::span<const RatFunc> inputs);

  const std::vector<Integer>& integers() const { return integers_; }
  const std::vector<Poly>& elements() const { return elements_; }
  std::size_t rank() const { return integers_.size() + elements_.size(); }

  // Exponent vector of p up to sign; throws Precondition if p does not
  // factor over the basis.
  std::vector<long> exponents(const Poly& p) const;
  std::vector<long> exponents(const RatFunc& f) const;
  int sign(const Poly& p) const;

  // +-1 times the product of basis powers; the inverse of exponents().
  RatFunc reconstruct(const std::vector<long>& exps) const;

  std::string to_string(const VarNames& names = {}) const;

 private:
  std::vector<Integer> integers_;
  std::vector<Poly> elements_;
};

struct UnitWedge {
  Rational coef;
  RatFunc left;
  RatFunc right;
};

/// Decides whether sum coef * (left ^ right) vanishes in Lambda^2(Q(x)^x) (x) Q.
bool unit_wedge_vanishes(std::span<const UnitWedge> terms);

/// Trial-division factorization of |n| for n != 0; the last factor may be a
/// composite cofactor above `bound`.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n,
                                                         unsigned long bound = 100000);

}  // namespace infinireg
