#include "doctest.h"
#include "infinireg/algebra/gcd_free_basis.hpp"
#include "infinireg/algebra/linsolve.hpp"
#include "infinireg/algebra/ratfunc.hpp"
#include "infinireg/cli/random.hpp"

using namespace infinireg;

namespace {

const RatFunc x = RatFunc::variable(0);
const RatFunc y = RatFunc::variable(1);
const Poly px = Poly::variable(0);
const Poly py = Poly::variable(1);

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("ratfunc arithmetic examples") {
  CHECK((x / (x - 1)) * ((x - 1) / x) == RatFunc(1));
  CHECK(x + (RatFunc(1) - x) == RatFunc(1));
  const RatFunc q(px * px - 1, px - 1);
  CHECK(q == x + 1);
  CHECK(q.to_string() == "x1 + 1");
  CHECK_THROWS_AS(ratfunc_arith(x, RatFunc(), ArithOp::Div), Error);
}

TEST_CASE("normal form: monic denominator, coprime parts") {
  const RatFunc f(px.scaled(2), px.scaled(4) - 2);
  CHECK(f.den() == px - Rational(1, 2));
  CHECK(f.num() == px.scaled(Rational(1, 2)));
  CHECK(f.to_string() == "1/2*x1/(x1 - 1/2)");
  CHECK(RatFunc(Poly(3), Poly(6)) == RatFunc(Rational(1, 2)));
}

TEST_CASE("partial derivative examples") {
  CHECK(partial_derivative(x * x, 0) == x.scaled(2));
  CHECK(partial_derivative(RatFunc(1) / x, 0) == RatFunc(-1) / (x * x));
  CHECK(partial_derivative(x / (x - 1), 0) == RatFunc(-1) / ((x - 1) * (x - 1)));
  CHECK(partial_derivative(x * y, 1) == x);
}

TEST_CASE("gcd") {
  CHECK(gcd(px * px - 1, px * px + px.scaled(2) + 1) == px + 1);
  CHECK(gcd((px + py) * (px - py), (px + py) * (px + 1)) == px + py);
  CHECK(gcd(px.scaled(3), Poly(6)) == Poly(1));
  CHECK(gcd(Poly(), px.scaled(2) + 2) == px + 1);
}

TEST_CASE("linear_solve_exact examples") {
  const RationalMatrix id{{1, 0}, {0, 1}};
  const std::vector<Rational> b{Rational(3), Rational(-2, 7)};
  CHECK(linear_solve_exact(id, b) == b);
  CHECK_FALSE(linear_solve_exact({{1, 1}, {2, 2}}, {Rational(1), Rational(3)}).has_value());
  const auto s = linear_solve_exact({{2, 0}, {0, 3}}, {Rational(1), Rational(1)});
  REQUIRE(s.has_value());
  CHECK((*s)[0] == Rational(1, 2));
  CHECK((*s)[1] == Rational(1, 3));
}

TEST_CASE("linear_solve_exact on random consistent systems") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int rows = static_cast<int>(rng.integer(1, 5));
    const int cols = static_cast<int>(rng.integer(1, 5));
    RationalMatrix m(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols)));
    std::vector<Rational> sol(static_cast<std::size_t>(cols));
    for (auto& v : sol) v = rng.rational(4);
    std::vector<Rational> rhs(static_cast<std::size_t>(rows), Rational(0));
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        m[i][j] = rng.rational(3);
        rhs[i] += m[i][j] * sol[j];
      }
    }
    const auto got = linear_solve_exact(m, rhs);
    REQUIRE(got.has_value());
    for (int i = 0; i < rows; ++i) {
      Rational acc = 0;
      for (int j = 0; j < cols; ++j) acc += m[i][j] * (*got)[j];
      CHECK(acc == rhs[i]);
    }
  }
}

TEST_CASE("gcd_free_basis examples") {
  {
    const std::vector<Poly> in{px, px - 1};
    const auto b = GcdFreeBasis::build(std::span<const Poly>(in));
    CHECK(b.integers().empty());
    CHECK(b.elements().size() == 2);
  }
  {
    const std::vector<Poly> in{px * px - px, px};
    const auto b = GcdFreeBasis::build(std::span<const Poly>(in));
    REQUIRE(b.elements().size() == 2);
    CHECK(b.exponents(px * px - px) == std::vector<long>{1, 1});
    CHECK(b.exponents(px) != b.exponents(px - 1));
  }
  {
    const std::vector<Poly> in{Poly(6)};
    const auto b = GcdFreeBasis::build(std::span<const Poly>(in));
    CHECK(b.integers() == std::vector<Integer>{2, 3});
    CHECK(b.exponents(Poly(6)) == std::vector<long>{1, 1});
    CHECK(b.exponents(Poly(Rational(-2, 3))) == std::vector<long>{1, -1});
  }
}

TEST_CASE("gcd_free_basis splits squares and shared factors") {
  const Poly a = (px + 1) * (px + 1) * (px - py);
  const Poly b = (px + 1) * (py + 2);
  const std::vector<Poly> in{a, b};
  const auto basis = GcdFreeBasis::build(std::span<const Poly>(in));
  CHECK(basis.elements().size() == 3);
  for (const auto& p : in) {
    const RatFunc r = basis.reconstruct(basis.exponents(p));
    CHECK((r == RatFunc(p) || r == -RatFunc(p)));
  }
}

TEST_CASE("unit wedge vanishing") {
  const std::vector<UnitWedge> anti{{1, x, x - 1}, {1, x - 1, x}};
  CHECK(unit_wedge_vanishes(anti));
  const std::vector<UnitWedge> single{{1, x, x - 1}};
  CHECK_FALSE(unit_wedge_vanishes(single));
  // (-1) ^ u is torsion and x ^ x is zero.
  const std::vector<UnitWedge> torsion{{1, RatFunc(-1), x}, {3, x, x.scaled(-1)}};
  CHECK(unit_wedge_vanishes(torsion));
  // x^2 ^ y = 2 (x ^ y).
  const std::vector<UnitWedge> bilinear{{1, x * x, y}, {-2, x, y}};
  CHECK(unit_wedge_vanishes(bilinear));
}

TEST_CASE("property: normalize(f*g/g) == f and Leibniz") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const RatFunc f = rng.ratfunc(2, 2, 5);
    const RatFunc g = rng.nonzero_ratfunc(2, 2, 5);
    CHECK(f * g / g == f);
    for (int j = 0; j < 2; ++j) {
      CHECK(partial_derivative(f * g, j) ==
            f * partial_derivative(g, j) + g * partial_derivative(f, j));
    }
  }
}

TEST_CASE("property: gcd divides, cofactors coprime, common factor found") {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.integer(1, 3));
    const Poly g = rng.poly(n, 3, 9, 4);
    const Poly a = rng.poly(n, 4, 20, 5) * g.pow(static_cast<unsigned>(rng.integer(1, 2)));
    const Poly b = rng.poly(n, 4, 20, 5) * g;
    if (a.is_zero() || b.is_zero()) continue;
    const Poly h = gcd(a, b);
    REQUIRE(!h.is_zero());
    CHECK(h.leading_coef() == 1);
    const auto qa = a.divide_exact(h);
    const auto qb = b.divide_exact(h);
    REQUIRE(qa.has_value());
    REQUIRE(qb.has_value());
    CHECK(gcd(*qa, *qb).is_one());
    if (!g.is_zero()) CHECK(h.divide_exact(g).has_value());
  }
}

TEST_CASE("property: gcd_free_basis reconstruction and independence") {
  Rng rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Poly> in;
    for (int k = 0; k < 3; ++k) {
      Poly p = rng.poly(2, 2, 4) * rng.poly(2, 1, 4);
      if (!p.is_zero()) in.push_back(p);
    }
    if (in.empty()) continue;
    const auto basis = GcdFreeBasis::build(std::span<const Poly>(in));
    for (const auto& p : in) {
      const RatFunc r = basis.reconstruct(basis.exponents(p));
      CHECK((r == RatFunc(p) || r == -RatFunc(p)));
    }
    const auto& el = basis.elements();
    for (std::size_t i = 0; i < el.size(); ++i) {
      for (std::size_t j = i + 1; j < el.size(); ++j) CHECK(gcd(el[i], el[j]).is_one());
    }
    for (int k = 0; k < 10 && basis.rank() > 0; ++k) {
      std::vector<long> e(basis.rank());
      bool nonzero = false;
      for (auto& v : e) {
        v = rng.integer(-2, 2);
        nonzero = nonzero || v != 0;
      }
      if (!nonzero) continue;
      const RatFunc prod = basis.reconstruct(e);
      CHECK_FALSE((prod == RatFunc(1) || prod == RatFunc(-1)));
    }
  }
}

}  // TEST_SUITE
