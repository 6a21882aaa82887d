#include "doctest.h"
#include "infinireg/cli/generators.hpp"
#include "infinireg/regulator/regulator.hpp"
#include "oracles/li2_oracle.hpp"

using namespace infinireg;

namespace {

const RingSpec R11 = RingSpec::make(1, 1);
const RingSpec R12 = RingSpec::make(1, 2);
const RingSpec R22 = RingSpec::make(2, 2);
const RatFunc x = RatFunc::variable(0);
const TruncSymElement t1 = TruncSymElement::generator(0);
const TruncSymElement t2 = TruncSymElement::generator(1);

SqZeroElement el(const RatFunc& u, IVec v) { return {u, std::move(v)}; }

Sym3Class t_cubed(const RatFunc& c) { return Sym3Class::from(t1 * t1 * t1).scaled(c); }

const RingSpec* const kConfigs[] = {&R11, &R12, &R22};

}  // namespace

TEST_SUITE("regulator") {

TEST_CASE("li2_first examples") {
  const Splitting d0(1, 1);
  CHECK(li2_first(BlochSum::generator(el(x, {0})), d0).is_zero());
  CHECK(li2_first(BlochSum::generator(el(2, {3})), d0) == t_cubed(Rational(-27, 8)));
  const Splitting dt(std::vector<IVec>{{1}});
  CHECK(li2_first(BlochSum::generator(el(x, {1})), dt).is_zero());
  CHECK(li2_first(BlochSum::generator(el(x, {0})), dt) == t_cubed(RatFunc(Rational(1, 2)) / (x * x * (x - 1) * (x - 1))));
  CHECK(li2_first(InfBlochSum::generator(2, {3}), d0) == t_cubed(Rational(-27, 8)));
  CHECK_THROWS_AS(li2_first(InfBlochSum::generator(1, {1}), d0), Error);
}

TEST_CASE("li2_second examples") {
  const Splitting d0(1, 1);
  CHECK(li2_second(InfBlochSum::generator(2, {3}), d0) == t_cubed(Rational(-27, 8)));
  CHECK(li2_second(InfBlochSum::generator(x, {0}), d0).is_zero());
  CHECK(li2_second_term(TruncSymElement(x), TruncSymElement(x), d0).is_zero());

  // Degree-3 part of (log° ^ dlog)(delta[u + alpha]) is 1/2 alpha^2 dalpha/((u-1)^2 u^2).
  const RatFunc u = x;
  const TruncSymElement alpha = t1.scaled(RatFunc(2)) + t2.scaled(x);
  const TruncSymElement lift = TruncSymElement(u) + alpha;
  const Splitting d(1, 2);
  const RelOneForm lead = log_wedge_dlog(TruncSymElement(1) - lift, lift, d).coeff_part(2);
  const RatFunc w = RatFunc(Rational(1, 2)) / (u * u * (u - 1) * (u - 1));
  RelOneForm expected = RelOneForm::basis(2, 0, (alpha * alpha).scaled(w * 2));
  expected += RelOneForm::basis(2, 1, (alpha * alpha).scaled(w * x));
  CHECK(lead == expected);
}

TEST_CASE("li2_lift_perturbation_check examples") {
  CHECK(li2_lift_perturbation_check(x, {1, 2}, t1 * t1));
  CHECK(li2_lift_perturbation_check(x, {1, 2}, t1 * t2));
  CHECK(li2_lift_perturbation_check(x, {1, 2}, TruncSymElement()));
  CHECK_THROWS_AS(li2_lift_perturbation_check(x, {1, 2}, t1), Error);
}

TEST_CASE("d1_pushforward examples") {
  const Sym3Class c = t_cubed(x);
  CHECK(d1_pushforward(AlgebraHom::identity(R11), c) == c);
  AlgebraHom twice = AlgebraHom::identity(R11);
  twice.psit[0] = {2};
  CHECK(d1_pushforward(twice, c) == t_cubed(x * 8));
  AlgebraHom sum;
  sum.source = R11;
  sum.target = R12;
  sum.px = {x};
  sum.phix = {{0, 0}};
  sum.psit = {{1, 1}};
  sum.validate();
  const TruncSymElement s = t1 + t2;
  CHECK(d1_pushforward(sum, Sym3Class::from(t1 * t1 * t1)) == Sym3Class::from(s * s * s));
  CHECK(d1_pushforward(sum, Sym3Class::from(t1 * t1 * t1)).terms().size() == 4);
  AlgebraHom bad = AlgebraHom::identity(R11);
  bad.px = {RatFunc(1)};
  CHECK_THROWS_AS(d1_pushforward(bad, Sym3Class::from(t1 * t1 * t1).scaled(RatFunc(1) / (x - 1))), Error);
}

TEST_CASE("the five-cube identity vanishes") { CHECK(oracle::five_cube_identity().is_zero()); }

TEST_CASE("property: li2_first agrees with the series oracle") {
  Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const RingSpec& spec = *kConfigs[trial % 3];
    const Splitting d = random_splitting(rng, spec);
    const SqZeroElement a = random_flat_element(rng, spec);
    CHECK(li2_first(BlochSum::generator(a), d) == oracle::li2_series(a, d));
  }
}

TEST_CASE("property: li2_first kills the five-term relation") {
  Rng rng(67);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const RingSpec& spec = *kConfigs[trial % 3];
    const Splitting d = random_splitting(rng, spec);
    BlochSum s;
    try {
      s = five_term_sum(random_flat_element(rng, spec), random_flat_element(rng, spec));
    } catch (const Error&) {
      continue;
    }
    CHECK(li2_first(s, d).is_zero());
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("property: first and second constructions agree") {
  Rng rng(71);
  for (int trial = 0; trial < 15; ++trial) {
    const RingSpec& spec = *kConfigs[trial % 3];
    const Splitting d = trial % 2 ? random_splitting(rng, spec) : Splitting::zero(spec);
    const InfBlochSum s = random_inf_bloch(rng, spec, 2);
    CHECK(li2_first(s, d) == li2_second(s, d));
  }
}

TEST_CASE("property: li2_second ignores degree >= 2 perturbations of the lifts") {
  Rng rng(73);
  for (int trial = 0; trial < 12; ++trial) {
    const RingSpec& spec = *kConfigs[trial % 3];
    const Splitting d = random_splitting(rng, spec);
    const InfBlochSum s = random_inf_bloch(rng, spec, 1);
    const auto& [u, alpha] = s.terms().begin()->first;
    const TruncSymElement lift = TruncSymElement(u) + TruncSymElement::from_ivec(alpha) +
                                 random_homogeneous(rng, spec, 2) + random_homogeneous(rng, spec, 3);
    const TruncSymElement base = TruncSymElement(u) + random_homogeneous(rng, spec, 2);
    const Sym3Class value = li2_second_term(lift, base, d).scaled(RatFunc(s.terms().begin()->second));
    CHECK(value == li2_first(s, d));
    CHECK(li2_lift_perturbation_check(u, alpha, random_homogeneous(rng, spec, 2)));
  }
}

TEST_CASE("property: scaling t_i by lambda scales li2 by lambda^3") {
  Rng rng(79);
  for (int trial = 0; trial < 12; ++trial) {
    const RingSpec& spec = *kConfigs[trial % 3];
    const Splitting d0 = Splitting::zero(spec);
    const Rational lambda = rng.nonzero_rational(4);
    const SqZeroElement a = random_flat_element(rng, spec);
    const Sym3Class base = li2_first(BlochSum::generator(a), d0);
    const RatFunc cube = RatFunc(lambda * lambda * lambda);
    CHECK(li2_first(BlochSum::generator(scaling_endo(lambda, a)), d0) == base.scaled(cube));
    const InfBlochSum s = random_inf_bloch(rng, spec, 2);
    InfBlochSum scaled;
    for (const auto& [key, c] : s.terms()) scaled.add(key.first, ivec_scale(RatFunc(lambda), key.second), c);
    CHECK(li2_second(scaled, d0) == li2_second(s, d0).scaled(cube));
  }
}

TEST_CASE("property: pushforward along the identity is trivial and along a sum is linear") {
  Rng rng(83);
  for (int trial = 0; trial < 10; ++trial) {
    const Sym3Class a = Sym3Class::from(random_homogeneous(rng, R12, 3));
    const Sym3Class b = Sym3Class::from(random_homogeneous(rng, R12, 3));
    CHECK(d1_pushforward(AlgebraHom::identity(R12), a) == a);
    const AlgebraHom f = random_hom(rng, R12, R22);
    CHECK(d1_pushforward(f, a + b) == d1_pushforward(f, a) + d1_pushforward(f, b));
  }
}

}  // TEST_SUITE
