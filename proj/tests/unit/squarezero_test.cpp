#include "doctest.h"
#include "infinireg/cli/random.hpp"
#include "infinireg/squarezero/hom.hpp"

using namespace infinireg;

namespace {

const RingSpec R11 = RingSpec::make(1, 1);
const RingSpec R12 = RingSpec::make(1, 2);
const RatFunc x = RatFunc::variable(0);

SqZeroElement el(const RatFunc& u, IVec v) { return {u, std::move(v)}; }

SqZeroElement random_element(Rng& rng, const RingSpec& spec) {
  SqZeroElement a = SqZeroElement::base(rng.ratfunc(spec.n, 2, 4), spec.m);
  for (auto& c : a.v) c = rng.ratfunc(spec.n, 1, 4);
  return a;
}

}  // namespace

TEST_SUITE("squarezero") {

TEST_CASE("sq_mul examples") {
  CHECK(sq_mul(el(x, {1}), el(x, {-1})) == el(x * x, {0}));
  CHECK(sq_mul(el(1, {1}), el(1, {1})) == el(1, {2}));
  CHECK(sq_mul(el(0, {1, 0}), el(0, {0, 1})).is_zero());
}

TEST_CASE("sq_inv examples") {
  CHECK(sq_inv(el(x, {1})) == el(RatFunc(1) / x, {RatFunc(-1) / (x * x)}));
  CHECK(sq_inv(el(1, {0})) == el(1, {0}));
  CHECK_THROWS_AS(sq_inv(el(0, {1})), Error);
  try {
    sq_inv(el(0, {1}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonUnit);
  }
}

TEST_CASE("is_flat examples") {
  CHECK(is_flat(el(x, {0})));
  CHECK_FALSE(is_flat(el(1, {1})));
  CHECK(is_flat(el(2, {3})));
  CHECK_FALSE(is_flat(el(0, {1})));
}

TEST_CASE("apply_splitting examples") {
  CHECK(apply_splitting(Splitting::zero(R11), x) == el(x, {0}));
  const Splitting d({{RatFunc(1)}});
  CHECK(apply_splitting(d, x) == el(x, {1}));
  CHECK(apply_splitting(d, x * x) == el(x * x, {x.scaled(2)}));
}

TEST_CASE("apply_hom examples") {
  const AlgebraHom id = AlgebraHom::identity(R11);
  CHECK(apply_hom(id, el(x / (x - 1), {x})) == el(x / (x - 1), {x}));
  AlgebraHom f = id;
  f.phix[0] = {RatFunc(1)};
  CHECK(apply_hom(f, el(x * x, {0})) == el(x * x, {x.scaled(2)}));
  f.psit[0] = {RatFunc(0)};
  CHECK(apply_hom(f, el(0, {1})).is_zero());
}

TEST_CASE("apply_hom reports a vanishing denominator") {
  AlgebraHom f = AlgebraHom::identity(R11);
  f.px[0] = RatFunc(1);
  try {
    apply_hom(f, el(RatFunc(1) / (x - 1), {0}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DenominatorVanishes);
    CHECK(std::string(e.what()).find("x1 - 1") != std::string::npos);
  }
}

TEST_CASE("scaling_endo examples") {
  CHECK(scaling_endo(1, el(x, {3})) == el(x, {3}));
  CHECK(scaling_endo(0, el(x, {1})) == el(x, {0}));
  CHECK(scaling_endo(2, el(x, {3})) == el(x, {6}));
}

TEST_CASE("printing") {
  CHECK(el(x * x, {x.scaled(2), 0}).to_string(R12) == "x^2 + (2*x)*t1");
  CHECK(el(0, {1, -1}).to_string(R12) == "t1 + -t2");
  CHECK(el(0, {0, 0}).to_string(R12) == "0");
}

TEST_CASE("property: ring axioms, inverses, homomorphisms") {
  Rng rng(3);
  for (const RingSpec& spec : {R11, R12, RingSpec::make(2, 2)}) {
    for (int trial = 0; trial < 10; ++trial) {
      const SqZeroElement a = random_element(rng, spec);
      const SqZeroElement b = random_element(rng, spec);
      const SqZeroElement c = random_element(rng, spec);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.u.is_zero()) {
        CHECK(sq_inv(a) * a == SqZeroElement::base(1, spec.m));
      }
      const Rational lambda = rng.rational(5);
      CHECK(scaling_endo(lambda, a * b) == scaling_endo(lambda, a) * scaling_endo(lambda, b));

      Splitting d(spec.n, spec.m);
      std::vector<IVec> imgs;
      for (int j = 0; j < spec.n; ++j) {
        IVec v = ivec_zero(spec.m);
        for (auto& e : v) e = rng.ratfunc(spec.n, 1, 3);
        imgs.push_back(v);
      }
      d = Splitting(imgs);
      CHECK(apply_splitting(d, a.u * b.u) == apply_splitting(d, a.u) * apply_splitting(d, b.u));
      CHECK(to_split_coords(d, a * b) == to_split_coords(d, a) * to_split_coords(d, b));
      CHECK(from_split_coords(d, to_split_coords(d, a)) == a);

      AlgebraHom f = AlgebraHom::identity(spec);
      for (int j = 0; j < spec.n; ++j) {
        f.px[static_cast<std::size_t>(j)] = RatFunc::variable(j) + rng.rational(3);
        for (auto& e : f.phix[static_cast<std::size_t>(j)]) e = rng.ratfunc(spec.n, 1, 3);
      }
      for (auto& psi : f.psit) {
        for (auto& e : psi) e = rng.ratfunc(spec.n, 1, 3);
      }
      try {
        CHECK(apply_hom(f, a * b) == apply_hom(f, a) * apply_hom(f, b));
        CHECK(apply_hom(f, a + b) == apply_hom(f, a) + apply_hom(f, b));
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DenominatorVanishes);
      }
    }
  }
}

}  // TEST_SUITE
