#include "infinireg/algebra/ratfunc.hpp"

#include <algorithm>

namespace infinireg {

namespace {

Poly divide_or_throw(const Poly& a, const Poly& b) {
  if (b.is_one()) return a;
  auto q = a.divide_exact(b);
  if (!q) throw Error(ErrorCode::Internal, "expected exact polynomial division");
  return std::move(*q);
}

bool needs_parens(const Poly& p) { return p.size() > 1; }

}  // namespace

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  const Poly g = gcd(num, den);
  *this = make_reduced(divide_or_throw(num, g), divide_or_throw(den, g));
}

// Inputs already coprime; only the scalar normalization remains.
RatFunc RatFunc::make_reduced(Poly num, Poly den) {
  if (num.is_zero()) return RatFunc();
  const Rational& lc = den.leading_coef();
  if (lc != 1) {
    const Rational inv = Rational(1) / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return RatFunc(std::move(num), std::move(den), Normalized{});
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Normalized{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_);
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  const Poly g = gcd(a.den_, b.den_);
  const Poly ad = divide_or_throw(a.den_, g);
  const Poly bd = divide_or_throw(b.den_, g);
  Poly t = a.num_ * bd + b.num_ * ad;
  if (t.is_zero()) return RatFunc();
  const Poly g2 = gcd(t, g);
  return RatFunc::make_reduced(divide_or_throw(t, g2), ad * divide_or_throw(b.den_, g2));
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.is_constant()) return b.scaled(a.constant_value());
  if (b.is_constant()) return a.scaled(b.constant_value());
  const Poly g1 = gcd(a.num_, b.den_);
  const Poly g2 = gcd(b.num_, a.den_);
  return RatFunc::make_reduced(divide_or_throw(a.num_, g1) * divide_or_throw(b.num_, g2),
                               divide_or_throw(a.den_, g2) * divide_or_throw(b.den_, g1));
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::scaled(const Rational& c) const {
  if (c == 0) return RatFunc();
  return RatFunc(num_.scaled(c), den_, Normalized{});
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero rational function");
  return make_reduced(den_, num_);
}

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  return RatFunc(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)),
                 Normalized{});
}

RatFunc RatFunc::derivative(int var) const {
  if (den_.is_one()) return RatFunc(num_.derivative(var));
  const Poly dn = num_.derivative(var);
  const Poly dd = den_.derivative(var);
  if (dd.is_zero()) return RatFunc(dn, den_);
  return RatFunc(dn * den_ - num_ * dd, den_ * den_);
}

RatFunc RatFunc::substitute(std::span<const RatFunc> images) const {
  auto subst_poly = [&](const Poly& p) -> RatFunc {
    // Common-denominator evaluation: multiply through by prod den_j^{deg_j p}.
    int nvars = 0;
    for (int j = 0; j < Monomial::kMaxVars; ++j) {
      if (p.uses_var(j)) nvars = j + 1;
    }
    if (static_cast<std::size_t>(nvars) > images.size()) {
      throw Error(ErrorCode::Precondition, "substitution has too few images");
    }
    std::vector<unsigned> degs(static_cast<std::size_t>(nvars));
    std::vector<std::vector<Poly>> num_pows(static_cast<std::size_t>(nvars));
    std::vector<std::vector<Poly>> den_pows(static_cast<std::size_t>(nvars));
    for (int j = 0; j < nvars; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      degs[ju] = p.degree(j);
      num_pows[ju].push_back(Poly(1));
      den_pows[ju].push_back(Poly(1));
      for (unsigned e = 1; e <= degs[ju]; ++e) {
        num_pows[ju].push_back(num_pows[ju].back() * images[ju].num());
        den_pows[ju].push_back(den_pows[ju].back() * images[ju].den());
      }
    }
    Poly total;
    for (const auto& t : p.terms()) {
      Poly term(t.coef);
      for (int j = 0; j < nvars; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        const unsigned e = t.mono.exponent(j);
        if (e != 0) term *= num_pows[ju][e];
        if (degs[ju] - e != 0) term *= den_pows[ju][degs[ju] - e];
      }
      total += term;
    }
    Poly common(1);
    for (int j = 0; j < nvars; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      common *= den_pows[ju][degs[ju]];
    }
    return RatFunc(total, common);
  };
  const RatFunc n = subst_poly(num_);
  if (den_.is_one()) return n;
  const RatFunc d = subst_poly(den_);
  if (d.is_zero()) {
    throw Error(ErrorCode::DenominatorVanishes,
                "denominator " + den_.to_string() + " vanishes under substitution");
  }
  return n / d;
}

Rational RatFunc::evaluate(std::span<const Rational> point) const {
  const Rational d = den_.evaluate(point);
  if (d == 0) {
    throw Error(ErrorCode::DenominatorVanishes,
                "denominator " + den_.to_string() + " vanishes at evaluation point");
  }
  return num_.evaluate(point) / d;
}

std::string RatFunc::to_string(const VarNames& names) const {
  if (den_.is_one()) return num_.to_string(names);
  std::string n = num_.to_string(names);
  std::string d = den_.to_string(names);
  if (needs_parens(num_)) n = "(" + n + ")";
  if (needs_parens(den_) || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b) {
  if (auto c = a.num_ <=> b.num_; c != 0) return c;
  return a.den_ <=> b.den_;
}

RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div:
      if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero rational function");
      return a / b;
  }
  throw Error(ErrorCode::Internal, "unknown arithmetic op");
}

}  // namespace infinireg
