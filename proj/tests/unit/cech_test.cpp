#include "doctest.h"
#include "infinireg/cech/cech.hpp"
#include "infinireg/cli/generators.hpp"
#include "infinireg/homotopy/homotopy.hpp"
#include "infinireg/regulator/regulator.hpp"

using namespace infinireg;

namespace {

const RingSpec R11 = RingSpec::make(1, 1);
const RingSpec R12 = RingSpec::make(1, 2);
const RingSpec R22 = RingSpec::make(2, 2);
const RatFunc x = RatFunc::variable(0);
const TruncSymElement t1 = TruncSymElement::generator(0);
const Splitting d_zero(1, 1);
const Splitting d_t1(std::vector<IVec>{{1}});

Sym3Class t_cubed(const RatFunc& c) { return Sym3Class::from(t1 * t1 * t1).scaled(c); }

CoverSetup cover_of(const RingSpec& spec, std::vector<Splitting> ds) { return {spec, std::move(ds)}; }

CoverSetup random_cover(Rng& rng, const RingSpec& spec, int r) {
  CoverSetup c{spec, {}};
  for (int i = 0; i < r; ++i) c.splittings.push_back(random_splitting(rng, spec));
  return c;
}

std::vector<InfBlochSum> random_sections(Rng& rng, const RingSpec& spec, int r) {
  std::vector<InfBlochSum> out;
  for (int i = 0; i < r; ++i) out.push_back(random_inf_bloch(rng, spec, 1));
  return out;
}

const InfBlochSum shifted_x = InfBlochSum::generator(x, {1});

}  // namespace

TEST_SUITE("cech") {

TEST_CASE("assemble_gamma examples") {
  const CoverSetup same = cover_of(R11, {d_t1, d_t1, d_t1});
  const std::vector<InfBlochSum> c = {shifted_x, InfBlochSum::generator(x * 2, {x}), {}};
  const GammaCocycle g = assemble_gamma(same, CechDatum::consistent(c));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(g.at(i, j) == li2_first(c[j], d_t1) - li2_first(c[i], d_t1));
  }

  const CoverSetup two = cover_of(R11, {d_zero, d_t1});
  const GammaCocycle g12 = assemble_gamma(two, CechDatum::consistent({{}, shifted_x}));
  const Sym3Class h_term = homotopy_h(AlgebraHom::identity(R11), d_zero, d_t1, delta_inf(shifted_x));
  const RatFunc den = x * (x - 1);
  CHECK(g12.at(0, 1) == t_cubed(RatFunc(Rational(-1, 2)) / (den * den)) + h_term);
  CHECK(g12.at(1, 0) == -g12.at(0, 1));

  const GammaCocycle zero = assemble_gamma(two, CechDatum::consistent({{}, {}}));
  CHECK(zero.at(0, 1).is_zero());
  CHECK_THROWS_AS(assemble_gamma(cover_of(R11, {d_zero}), CechDatum::consistent({{}})), Error);
}

TEST_CASE("verify_cocycle examples") {
  const CoverSetup cover = cover_of(R11, {d_zero, d_t1, Splitting(std::vector<IVec>{{x}})});
  GammaCocycle g = assemble_gamma(cover, CechDatum::consistent({shifted_x, {}, InfBlochSum::generator(x + 1, {2})}));
  CHECK(verify_cocycle(g));
  g.set(0, 1, g.at(0, 1) + Sym3Class::from(t1 * t1 * t1));
  CHECK_FALSE(verify_cocycle(g));
  CHECK(cocycle_failures(g).size() == 1);
  CHECK(verify_cocycle(GammaCocycle(2)));
}

TEST_CASE("raw data") {
  std::map<OpenPair, InfBlochSum> a;
  a[{1, 0}] = shifted_x;
  const CechDatum raw = CechDatum::raw(a, {delta_inf(shifted_x), {}});
  CHECK(raw.a(0, 1) == -shifted_x);
  CHECK(raw.a(1, 0) == shifted_x);
  CHECK(raw.a(0, 0).is_zero());
  CHECK_THROWS_AS(CechDatum::raw({{{0, 0}, shifted_x}}, {{}, {}}), Error);
  // RAW data matching consistent sections assembles to the same cocycle.
  const CoverSetup cover = cover_of(R11, {d_zero, d_t1});
  const CechDatum same = CechDatum::raw({{{0, 1}, shifted_x}}, {{}, delta_inf(shifted_x)});
  CHECK(assemble_gamma(cover, same).values() == assemble_gamma(cover, CechDatum::consistent({{}, shifted_x})).values());
}

TEST_CASE("splitting_change_delta examples") {
  const CoverSetup cover = cover_of(R11, {d_zero, d_t1, d_t1});
  const CechDatum data = CechDatum::consistent({shifted_x, {}, InfBlochSum::generator(x * 3, {x})});
  const SplittingChange none = splitting_change_delta(cover, cover, data);
  CHECK(none.is_coboundary);
  for (const auto& [key, v] : none.difference) CHECK(v.is_zero());

  CoverSetup moved = cover;
  moved.splittings[2] = Splitting(std::vector<IVec>{{x * x}});
  const SplittingChange change = splitting_change_delta(cover, moved, data);
  CHECK(change.is_coboundary);
  CHECK_FALSE(change.witness[2].is_zero());

  CechDatum raw = data;
  raw.perturb_b(0, FWedgeSum());
  CHECK(raw.mode() == CechMode::Raw);
  CHECK_THROWS_AS(splitting_change_delta(cover, cover, raw), Error);
}

TEST_CASE("boundary_to_boundary examples") {
  CHECK(boundary_to_boundary(cover_of(R11, {d_t1, d_t1}), {shifted_x, shifted_x.scaled(2)}));
  CHECK(boundary_to_boundary(cover_of(R11, {d_zero, d_t1}), {{}, shifted_x}));
  CHECK(boundary_to_boundary(cover_of(R11, {d_zero, d_t1}), {{}, {}}));
}

TEST_CASE("rho1_sections examples") {
  const CoverSetup cover = cover_of(R11, {d_zero, d_t1});
  const Rho1Report zero = rho1_sections(cover, CechDatum::consistent({{}, {}}), 2);
  CHECK(zero.ok());
  for (const auto& s : zero.sections) CHECK(s.is_zero());

  const CechDatum data = CechDatum::consistent({{}, shifted_x});
  const Rho1Report good = rho1_sections(cover, data, 2);
  CHECK(good.ok());
  CHECK(good.primitives.at({0, 1}).has_value());
  CHECK(abs_d(*good.primitives.at({0, 1}), 1) == good.sections[1] - good.sections[0]);

  CechDatum bad = data;
  bad.perturb_b(0, FWedgeSum::single(WedgeTerm::g2({1}, x)));
  const Rho1Report flagged = rho1_sections(cover, bad, 6);
  CHECK_FALSE(flagged.ok());
  CHECK(flagged.flagged == std::vector<OpenPair>{{0, 1}});
  CHECK(flagged.cap == 6);
}

TEST_CASE("property: random consistent data gives a cocycle") {
  Rng rng(109);
  const RingSpec* const specs[] = {&R11, &R12, &R22};
  for (int trial = 0; trial < 6; ++trial) {
    const RingSpec& spec = *specs[trial % 3];
    const int r = 3 + trial % 2;
    const CoverSetup cover = random_cover(rng, spec, r);
    const CechDatum data = CechDatum::consistent(random_sections(rng, spec, r));
    CHECK(verify_cocycle(assemble_gamma(cover, data)));
    const CoverSetup changed = random_cover(rng, spec, r);
    CHECK(splitting_change_delta(cover, changed, data).is_coboundary);
    CHECK(boundary_to_boundary(cover, data.sections()));
  }
}

TEST_CASE("property: branches differ by h") {
  Rng rng(113);
  for (int trial = 0; trial < 6; ++trial) {
    const RingSpec& spec = trial % 2 ? R12 : R11;
    const Splitting a = random_splitting(rng, spec);
    const Splitting b = random_splitting(rng, spec);
    const InfBlochSum s = random_inf_bloch(rng, spec, 2);
    CHECK(li2_first(s, b) - li2_first(s, a) == homotopy_h(AlgebraHom::identity(spec), a, b, delta_inf(s)));
  }
}

TEST_CASE("property: rho1 sections glue") {
  Rng rng(127);
  for (int trial = 0; trial < 4; ++trial) {
    const RingSpec& spec = trial % 2 ? R12 : R11;
    const CoverSetup cover = random_cover(rng, spec, 3);
    const Rho1Report report = rho1_sections(cover, CechDatum::consistent(random_sections(rng, spec, 3)), 4);
    CHECK(report.ok());
  }
}

}  // TEST_SUITE
