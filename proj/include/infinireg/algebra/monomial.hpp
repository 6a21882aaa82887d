#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "infinireg/errors.hpp"

namespace infinireg {

// Exponent vector packed into one word: byte 7 holds the total degree and
// bytes 6..0 hold the exponents of variables 0..6. Comparing the raw words
// is graded-lex order with variable 0 largest.
class Monomial {
 public:
  static constexpr int kMaxVars = 7;
  static constexpr unsigned kMaxDegree = 255;

  constexpr Monomial() = default;

  static Monomial variable(int var, unsigned exponent = 1);
  static Monomial from_exponents(std::span<const unsigned> exps);

  unsigned degree() const { return static_cast<unsigned>(bits_ >> 56); }
  unsigned exponent(int var) const {
    return static_cast<unsigned>((bits_ >> shift(var)) & 0xffu);
  }
  bool is_one() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }

  std::vector<unsigned> exponents(int nvars) const;

  bool divides(Monomial other) const;

  Monomial operator*(Monomial other) const;
  // Requires divides(other) in reverse: *this must be divisible by other.
  Monomial operator/(Monomial other) const;

  // Exponent of `var` lowered by one; requires exponent(var) > 0.
  Monomial lower(int var) const;
  Monomial without(int var) const;

  static Monomial gcd(Monomial a, Monomial b);
  static Monomial lcm(Monomial a, Monomial b);

  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}
  static constexpr int shift(int var) { return 48 - 8 * var; }

  std::uint64_t bits_ = 0;
};

}  // namespace infinireg
