#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "infinireg/squarezero/splitting.hpp"

namespace infinireg {

/// Element of S(I) over Q(x) modulo t-degree 4. Keys are monomials in the
/// t-variables; degree-0 is the base component.
class TruncSymElement {
 public:
  static constexpr unsigned kMaxDegree = 3;
  using TermMap = std::map<Monomial, RatFunc, std::greater<>>;

  TruncSymElement() = default;
  TruncSymElement(const RatFunc& c);  // NOLINT(google-explicit-constructor)
  TruncSymElement(long c) : TruncSymElement(RatFunc(c)) {}  // NOLINT(google-explicit-constructor)

  static TruncSymElement generator(int i);
  static TruncSymElement monomial(Monomial mono, const RatFunc& c);
  static TruncSymElement from_ivec(const IVec& v);
  // The degree <= 1 lift u + sum v_i t_i.
  static TruncSymElement lift(const SqZeroElement& a);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coeff(Monomial mono) const;
  RatFunc constant() const { return coeff(Monomial()); }
  TruncSymElement part(unsigned degree) const;
  TruncSymElement positive_part() const;
  // Smallest degree present; kMaxDegree + 1 for zero.
  unsigned min_degree() const;
  // Reads the degree-1 part as an element of I with m generators.
  IVec linear_part(int m) const;

  TruncSymElement operator-() const;
  TruncSymElement& operator+=(const TruncSymElement& o);
  TruncSymElement& operator-=(const TruncSymElement& o);
  friend TruncSymElement operator+(TruncSymElement a, const TruncSymElement& b) { return a += b; }
  friend TruncSymElement operator-(TruncSymElement a, const TruncSymElement& b) { return a -= b; }
  friend TruncSymElement operator*(const TruncSymElement& a, const TruncSymElement& b);
  TruncSymElement& operator*=(const TruncSymElement& o) { return *this = *this * o; }

  TruncSymElement scaled(const RatFunc& c) const;
  TruncSymElement pow(unsigned k) const;
  // Throws NON_UNIT when the base component vanishes.
  TruncSymElement inverse() const;
  TruncSymElement partial_t(int i) const;
  TruncSymElement partial_x(int j) const;
  TruncSymElement map_coeffs(const std::function<RatFunc(const RatFunc&)>& fn) const;

  std::string to_string(const RingSpec& spec) const;

  friend bool operator==(const TruncSymElement&, const TruncSymElement&) = default;

 private:
  void add_term(Monomial mono, const RatFunc& c);

  TermMap terms_;
};

TruncSymElement trunc_mul(const TruncSymElement& a, const TruncSymElement& b);
// log(1 + e) and exp(e) for e without base component.
TruncSymElement trunc_log1p(const TruncSymElement& e);
TruncSymElement trunc_exp(const TruncSymElement& e);

/// Element of S^3(I), the value space of the regulator and of h.
class Sym3Class {
 public:
  Sym3Class() = default;
  // Degree-3 part of a truncated element.
  static Sym3Class from(const TruncSymElement& e);
  static Sym3Class product(const IVec& a, const IVec& b, const IVec& c);
  static Sym3Class cube(const IVec& a) { return product(a, a, a); }

  const TruncSymElement::TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coeff(Monomial mono) const;

  Sym3Class operator-() const;
  Sym3Class& operator+=(const Sym3Class& o);
  Sym3Class& operator-=(const Sym3Class& o);
  friend Sym3Class operator+(Sym3Class a, const Sym3Class& b) { return a += b; }
  friend Sym3Class operator-(Sym3Class a, const Sym3Class& b) { return a -= b; }
  Sym3Class scaled(const RatFunc& c) const;
  Sym3Class map_coeffs(const std::function<RatFunc(const RatFunc&)>& fn) const;
  TruncSymElement as_element() const;

  std::string to_string(const RingSpec& spec) const;

  friend bool operator==(const Sym3Class&, const Sym3Class&) = default;

 private:
  TruncSymElement::TermMap terms_;
};

/// Algebra map of truncated symmetric algebras determined by the images of
/// the x_j and t_i. Base coefficients are pushed through by Taylor expansion
/// around the degree-0 part of the x-images.
class TruncHom {
 public:
  TruncHom() = default;
  TruncHom(std::vector<TruncSymElement> ximages, std::vector<TruncSymElement> timages);

  static TruncHom identity(int n, int m);
  // x_j -> x_j + D(x_j), t_i -> t_i: carries the standard base inclusion to tau_D.
  static TruncHom shift(const Splitting& d);
  static TruncHom shift_inverse(const Splitting& d);

  const std::vector<TruncSymElement>& ximages() const { return ximages_; }
  const std::vector<TruncSymElement>& timages() const { return timages_; }

  TruncSymElement apply(const RatFunc& c) const;
  TruncSymElement apply(const TruncSymElement& b) const;

 private:
  std::vector<TruncSymElement> ximages_;
  std::vector<TruncSymElement> timages_;
  std::vector<RatFunc> base_point_;
  std::vector<TruncSymElement> shifts_;
  bool base_is_identity_ = true;
};

// log(a / tau_D(a_0)).
TruncSymElement trunc_log_circ(const TruncSymElement& a, const Splitting& d);

}  // namespace infinireg
