#pragma once

#include <span>
#include <string>
#include <vector>

#include "infinireg/algebra/poly.hpp"

namespace infinireg {

/// Element of Q(x_1..x_n): num/den with gcd(num, den) = 1 and den monic in
/// graded-lex order. Every nonzero value is a unit.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& num, const Poly& den);

  static RatFunc variable(int var) { return RatFunc(Poly::variable(var)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  Rational constant_value() const { return num_.constant_value(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc scaled(const Rational& c) const;
  RatFunc inverse() const;
  RatFunc pow(int k) const;
  RatFunc derivative(int var) const;

  // Substitutes x_j -> images[j]. Throws DENOMINATOR_VANISHES when the
  // denominator maps to zero.
  RatFunc substitute(std::span<const RatFunc> images) const;
  Rational evaluate(std::span<const Rational> point) const;

  std::string to_string(const VarNames& names = {}) const;

  friend bool operator==(const RatFunc&, const RatFunc&) = default;
  friend std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b);

 private:
  struct Normalized {};
  RatFunc(Poly num, Poly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  static RatFunc make_reduced(Poly num, Poly den);

  Poly num_;
  Poly den_;
};

enum class ArithOp { Add, Sub, Mul, Div };

RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, ArithOp op);

inline RatFunc partial_derivative(const RatFunc& f, int var) { return f.derivative(var); }

}  // namespace infinireg
