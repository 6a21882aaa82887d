#include "infinireg/algebra/monomial.hpp"

#include <algorithm>
#include <string>

namespace infinireg {

namespace {

void check_var(int var) {
  if (var < 0 || var >= Monomial::kMaxVars) {
    throw Error(ErrorCode::Overflow,
                "variable index " + std::to_string(var) + " outside 0.." +
                    std::to_string(Monomial::kMaxVars - 1));
  }
}

}  // namespace

Monomial Monomial::variable(int var, unsigned exponent) {
  check_var(var);
  if (exponent > kMaxDegree) {
    throw Error(ErrorCode::Overflow, "monomial degree exceeds 255");
  }
  return Monomial((static_cast<std::uint64_t>(exponent) << 56) |
                  (static_cast<std::uint64_t>(exponent) << shift(var)));
}

Monomial Monomial::from_exponents(std::span<const unsigned> exps) {
  Monomial m;
  for (std::size_t j = 0; j < exps.size(); ++j) {
    if (exps[j] != 0) m = m * variable(static_cast<int>(j), exps[j]);
  }
  return m;
}

std::vector<unsigned> Monomial::exponents(int nvars) const {
  std::vector<unsigned> out(static_cast<std::size_t>(nvars));
  for (int j = 0; j < nvars; ++j) out[static_cast<std::size_t>(j)] = exponent(j);
  return out;
}

bool Monomial::divides(Monomial other) const {
  for (int j = 0; j < kMaxVars; ++j) {
    if (exponent(j) > other.exponent(j)) return false;
  }
  return true;
}

Monomial Monomial::operator*(Monomial other) const {
  if (degree() + other.degree() > kMaxDegree) {
    throw Error(ErrorCode::Overflow, "monomial degree exceeds 255");
  }
  return Monomial(bits_ + other.bits_);
}

Monomial Monomial::operator/(Monomial other) const {
  if (!other.divides(*this)) {
    throw Error(ErrorCode::Internal, "monomial division is not exact");
  }
  return Monomial(bits_ - other.bits_);
}

Monomial Monomial::lower(int var) const {
  check_var(var);
  if (exponent(var) == 0) {
    throw Error(ErrorCode::Internal, "lowering a zero exponent");
  }
  return Monomial(bits_ - (std::uint64_t{1} << 56) - (std::uint64_t{1} << shift(var)));
}

Monomial Monomial::without(int var) const {
  check_var(var);
  const std::uint64_t e = exponent(var);
  return Monomial(bits_ - (e << 56) - (e << shift(var)));
}

Monomial Monomial::gcd(Monomial a, Monomial b) {
  Monomial m;
  for (int j = 0; j < kMaxVars; ++j) {
    const unsigned e = std::min(a.exponent(j), b.exponent(j));
    if (e != 0) m = m * variable(j, e);
  }
  return m;
}

Monomial Monomial::lcm(Monomial a, Monomial b) {
  Monomial m;
  for (int j = 0; j < kMaxVars; ++j) {
    const unsigned e = std::max(a.exponent(j), b.exponent(j));
    if (e != 0) m = m * variable(j, e);
  }
  return m;
}

}  // namespace infinireg
