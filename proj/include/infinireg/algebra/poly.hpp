#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infinireg/algebra/monomial.hpp"

namespace infinireg {

using Rational = mpq_class;
using Integer = mpz_class;
using VarNames = std::vector<std::string>;

std::string to_string(const Rational& q);

struct Term {
  Monomial mono;
  Rational coef;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q. Terms are kept in strictly decreasing graded-lex
/// order with no zero coefficients, so structural equality is equality.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static Poly variable(int var);
  static Poly monomial(Monomial m, Rational c = 1);
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  bool is_one() const;
  Rational constant_value() const;
  Rational constant_term() const;
  const Term& leading() const { return terms_.front(); }
  const Rational& leading_coef() const { return terms_.front().coef; }

  unsigned total_degree() const;
  unsigned degree(int var) const;
  bool uses_var(int var) const { return degree(var) > 0; }
  // Bit j set iff variable j occurs.
  unsigned var_mask() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(const Rational& c) const;
  Poly times_monomial(Monomial m) const;
  Poly pow(unsigned k) const;
  Poly derivative(int var) const;

  Rational evaluate(std::span<const Rational> point) const;

  // Quotient if `d` divides *this exactly, otherwise nullopt.
  std::optional<Poly> divide_exact(const Poly& d) const;

  // Integer coefficients with gcd 1 and positive leading coefficient.
  Poly primitive() const;
  // Leading coefficient scaled to 1.
  Poly monic() const;

  std::string to_string(const VarNames& names = {}) const;

  friend bool operator==(const Poly&, const Poly&) = default;
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

 private:
  std::vector<Term> terms_;
};

std::string var_name(const VarNames& names, int var);

/// Greatest common divisor over Q, normalized to be monic (1 for coprime
/// inputs, 0 only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

}  // namespace infinireg
