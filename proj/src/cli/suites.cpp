#include "infinireg/cli/suites.hpp"

#include <functional>
#include <map>
#include <ostream>

#include "infinireg/algebra/gcd_free_basis.hpp"
#include "infinireg/cech/cech.hpp"
#include "infinireg/cli/generators.hpp"
#include "infinireg/homotopy/homotopy.hpp"
#include "infinireg/regulator/regulator.hpp"

namespace infinireg {

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::pair<std::string, std::string>> fields;

  void show(const std::string& name, const std::string& value) { fields.emplace_back(name, value); }
  // Records a named comparison; the sample passes only if all hold.
  void expect(const std::string& name, bool holds) {
    show(name, holds ? "holds" : "FAILS");
    pass = pass && holds;
  }
};

struct Context {
  const SuiteConfig& cfg;
  RingSpec spec;
};

using SampleFn = std::function<Outcome(Rng&, const Context&, int)>;

bool degenerate(const Error& e) {
  switch (e.code()) {
    case ErrorCode::FlatnessViolation:
    case ErrorCode::DenominatorVanishes:
    case ErrorCode::NonUnit:
    case ErrorCode::DivisionByZero: return true;
    default: return false;
  }
}

Outcome five_term(Rng& rng, const Context& ctx, int) {
  const Splitting d = random_splitting(rng, ctx.spec, ctx.cfg.size);
  const SqZeroElement x = random_flat_element(rng, ctx.spec, ctx.cfg.size);
  const SqZeroElement y = random_flat_element(rng, ctx.spec, ctx.cfg.size);
  const Sym3Class value = li2_first(five_term_sum(x, y), d);
  Outcome o;
  o.show("splitting", d.to_string(ctx.spec));
  o.show("x", x.to_string(ctx.spec));
  o.show("y", y.to_string(ctx.spec));
  o.show("lhs", value.to_string(ctx.spec));
  o.show("rhs", "0");
  o.expect("li2 of the five-term sum vanishes", value.is_zero());
  return o;
}

Outcome li2_equiv(Rng& rng, const Context& ctx, int index) {
  const Splitting d = index % 2 ? random_splitting(rng, ctx.spec, ctx.cfg.size) : Splitting::zero(ctx.spec);
  const InfBlochSum s = random_inf_bloch(rng, ctx.spec, 2, ctx.cfg.size);
  const Sym3Class first = li2_first(s, d);
  const Sym3Class second = li2_second(s, d);
  Outcome o;
  o.show("splitting", d.to_string(ctx.spec));
  o.show("s", s.to_string(ctx.spec));
  o.show("first", first.to_string(ctx.spec));
  o.show("second", second.to_string(ctx.spec));
  o.expect("first = second", first == second);
  return o;
}

Outcome eqhom(Rng& rng, const Context& ctx, int) {
  const AlgebraHom f = random_hom(rng, ctx.spec, ctx.spec, ctx.cfg.size);
  const Splitting d1 = random_splitting(rng, ctx.spec, ctx.cfg.size);
  const Splitting d2 = random_splitting(rng, ctx.spec, ctx.cfg.size);
  const InfBlochSum s = random_inf_bloch(rng, ctx.spec, 2, ctx.cfg.size);
  const EqhomSides sides = eqhom_sides(f, d1, d2, s);
  Outcome o;
  o.show("f", f.to_string());
  o.show("splitting1", d1.to_string(ctx.spec));
  o.show("splitting2", d2.to_string(ctx.spec));
  o.show("s", s.to_string(ctx.spec));
  o.show("lhs", sides.lhs.to_string(ctx.spec));
  o.show("rhs", sides.rhs.to_string(ctx.spec));
  o.expect("lhs = rhs", sides.lhs == sides.rhs);
  return o;
}

Outcome lift_indep(Rng& rng, const Context& ctx, int) {
  const AlgebraHom f = random_hom(rng, ctx.spec, ctx.spec, ctx.cfg.size);
  const Splitting d1 = random_splitting(rng, ctx.spec, ctx.cfg.size);
  const Splitting d2 = random_splitting(rng, ctx.spec, ctx.cfg.size);
  const InfBlochSum s = random_inf_bloch(rng, ctx.spec, 2, ctx.cfg.size);
  const LiftCorrections c1 = random_corrections(rng, f, ctx.cfg.size);
  const LiftCorrections c2 = random_corrections(rng, f, ctx.cfg.size);
  const FWedgeSum w = delta_inf(s);
  const Sym3Class h1 = homotopy_h(f, d1, d2, w, c1);
  const Sym3Class h2 = homotopy_h(f, d1, d2, w, c2);
  const Sym3Class definition = homotopy_hfhat(f, d1, d2, s, c2);
  Outcome o;
  o.show("f", f.to_string());
  o.show("splitting1", d1.to_string(ctx.spec));
  o.show("splitting2", d2.to_string(ctx.spec));
  o.show("s", s.to_string(ctx.spec));
  o.show("h with lift 1", h1.to_string(ctx.spec));
  o.show("h with lift 2", h2.to_string(ctx.spec));
  o.show("h from the lifted wedges", definition.to_string(ctx.spec));
  o.expect("lift 1 = lift 2", h1 == h2);
  o.expect("formula = definition", h2 == definition);
  return o;
}

Outcome cech(Rng& rng, const Context& ctx, int index) {
  const int r = 3 + index % 2;
  CoverSetup cover{ctx.spec, {}};
  CoverSetup changed{ctx.spec, {}};
  std::vector<InfBlochSum> sections;
  for (int i = 0; i < r; ++i) {
    cover.splittings.push_back(random_splitting(rng, ctx.spec, ctx.cfg.size));
    changed.splittings.push_back(random_splitting(rng, ctx.spec, ctx.cfg.size));
    sections.push_back(random_inf_bloch(rng, ctx.spec, 1, ctx.cfg.size));
  }
  const CechDatum data = CechDatum::consistent(sections);
  Outcome o;
  for (int i = 0; i < r; ++i) {
    const auto iu = static_cast<std::size_t>(i);
    o.show("splitting " + std::to_string(i + 1), cover.splittings[iu].to_string(ctx.spec));
    o.show("changed splitting " + std::to_string(i + 1), changed.splittings[iu].to_string(ctx.spec));
    o.show("section " + std::to_string(i + 1), sections[iu].to_string(ctx.spec));
  }
  const GammaCocycle g = assemble_gamma(cover, data);
  for (const auto& [key, value] : g.values()) {
    o.show("gamma(" + std::to_string(key.first + 1) + "," + std::to_string(key.second + 1) + ")", value.to_string(ctx.spec));
  }
  o.expect("cocycle", verify_cocycle(g));
  o.expect("splitting change is a coboundary", splitting_change_delta(cover, changed, data).is_coboundary);
  o.expect("boundary to boundary", boundary_to_boundary(cover, sections));
  return o;
}

Outcome euler(Rng& rng, const Context& ctx, int index) {
  const Splitting d = index % 2 ? random_splitting(rng, ctx.spec, ctx.cfg.size) : Splitting::zero(ctx.spec);
  const TruncSymElement g = random_trunc(rng, ctx.spec, 1, 4, ctx.cfg.size);
  // The antiderivative has no base component after untwisting.
  const TruncSymElement g0 = TruncHom::shift(d).apply(TruncHom::shift_inverse(d).apply(g).positive_part());
  const InfBlochSum s = random_inf_bloch(rng, ctx.spec, 1, ctx.cfg.size);
  const auto& [u, alpha] = s.terms().begin()->first;
  const RelOneForm w = li2_difference_form(TruncSymElement(u) + TruncSymElement::from_ivec(alpha), TruncSymElement(u), d);
  const TruncSymElement back = euler_antiderivative(rel_d(g, d), d);
  Outcome o;
  o.show("splitting", d.to_string(ctx.spec));
  o.show("element", g.to_string(ctx.spec));
  o.show("antiderivative of its differential", back.to_string(ctx.spec));
  o.show("closed form", w.to_string(ctx.spec));
  o.expect("antiderivative after differential", back == g0);
  o.expect("differential after antiderivative", rel_d(euler_antiderivative(w, d), d) == w);
  return o;
}

Outcome welldef(Rng& rng, const Context& ctx, int) {
  const Splitting d = random_splitting(rng, ctx.spec, ctx.cfg.size);
  const InfBlochSum s = random_inf_bloch(rng, ctx.spec, 1, ctx.cfg.size);
  const auto& [key, c] = *s.terms().begin();
  const auto& [u, alpha] = key;
  const TruncSymElement j_lift = random_homogeneous(rng, ctx.spec, 2, 2, ctx.cfg.size) +
                                 random_homogeneous(rng, ctx.spec, 3, 2, ctx.cfg.size);
  const TruncSymElement j_base = random_homogeneous(rng, ctx.spec, 2, 2, ctx.cfg.size);
  const TruncSymElement lift = TruncSymElement(u) + TruncSymElement::from_ivec(alpha) + j_lift;
  const TruncSymElement base = TruncSymElement(u) + j_base;
  const Sym3Class perturbed = li2_second_term(lift, base, d).scaled(RatFunc(c));
  const Sym3Class reference = li2_first(s, d);
  Outcome o;
  o.show("splitting", d.to_string(ctx.spec));
  o.show("s", s.to_string(ctx.spec));
  o.show("perturbation of the lift", j_lift.to_string(ctx.spec));
  o.show("perturbation of the base lift", j_base.to_string(ctx.spec));
  o.show("perturbed", perturbed.to_string(ctx.spec));
  o.show("reference", reference.to_string(ctx.spec));
  o.expect("perturbed = reference", perturbed == reference);
  return o;
}

Outcome scaling(Rng& rng, const Context& ctx, int) {
  const Splitting d0 = Splitting::zero(ctx.spec);
  const Rational lambda = rng.nonzero_rational(ctx.cfg.size.height + 1);
  const SqZeroElement a = random_flat_element(rng, ctx.spec, ctx.cfg.size);
  const RatFunc cube(lambda * lambda * lambda);
  const Sym3Class base = li2_first(BlochSum::generator(a), d0);
  const Sym3Class scaled = li2_first(BlochSum::generator(scaling_endo(lambda, a)), d0);
  Outcome o;
  o.show("lambda", to_string(lambda));
  o.show("a", a.to_string(ctx.spec));
  o.show("li2(a)", base.to_string(ctx.spec));
  o.show("li2(t_lambda a)", scaled.to_string(ctx.spec));
  o.expect("li2(t_lambda a) = lambda^3 li2(a)", scaled == base.scaled(cube));
  return o;
}

Outcome wedge_basis(Rng& rng, const Context& ctx, int) {
  const int n = ctx.spec.n;
  const unsigned deg = ctx.cfg.size.degree + 1;
  const RatFunc a = rng.nonzero_ratfunc(n, deg, ctx.cfg.size.height);
  const RatFunc b = rng.nonzero_ratfunc(n, deg, ctx.cfg.size.height);
  const RatFunc c = rng.nonzero_ratfunc(n, deg, ctx.cfg.size.height);
  const int k = static_cast<int>(rng.integer(2, 3));
  auto vanishes = [](std::vector<UnitWedge> terms) { return unit_wedge_vanishes(terms); };
  Outcome o;
  o.show("a", a.to_string(ctx.spec.xnames));
  o.show("b", b.to_string(ctx.spec.xnames));
  o.show("c", c.to_string(ctx.spec.xnames));
  o.expect("(ab)^c = a^c + b^c", vanishes({{1, a * b, c}, {-1, a, c}, {-1, b, c}}));
  o.expect("(a/b)^c = a^c - b^c", vanishes({{1, a / b, c}, {-1, a, c}, {1, b, c}}));
  o.expect("a^b = -b^a", vanishes({{1, a, b}, {1, b, a}}));
  o.expect("a^a = 0", vanishes({{1, a, a}}));
  o.expect("a^k ^ b = k a^b", vanishes({{1, a.pow(k), b}, {-k, a, b}}));
  o.expect("-1 is torsion", vanishes({{1, RatFunc(-1), a}}));
  return o;
}

// The five cubes of the functional equation over Q(a, b), with A = t1, B = t2.
Outcome master_identity(Rng&, const Context&, int) {
  const RingSpec spec = RingSpec::make(2, 2);
  const RatFunc a = RatFunc::variable(0);
  const RatFunc b = RatFunc::variable(1);
  const RatFunc one(1);
  auto cube_over = [](const RatFunc& ca, const RatFunc& cb, const RatFunc& den) {
    return Sym3Class::cube({ca, cb}).scaled((den * den).inverse());
  };
  Sym3Class sum = cube_over(one, 0, a * (a - 1));
  sum -= cube_over(0, one, b * (b - 1));
  sum += cube_over(-b, a, a * b * (a - b));
  sum -= cube_over(b * (b - 1), -(a * (a - 1)), a * b * (a - 1) * (b - 1) * (a - b));
  sum += cube_over(b - 1, -(a - 1), (a - 1) * (b - 1) * (a - b));
  Outcome o;
  o.show("sum of the five cubes", sum.is_zero() ? "0" : sum.to_string(spec));
  o.expect("sum vanishes", sum.is_zero());
  return o;
}

const std::map<std::string, SampleFn>& suites() {
  static const std::map<std::string, SampleFn> table = {
      {"five-term", five_term}, {"li2-equiv", li2_equiv}, {"eqhom", eqhom},
      {"lift-indep", lift_indep}, {"cech", cech}, {"euler", euler},
      {"welldef", welldef}, {"scaling", scaling}, {"wedge-basis", wedge_basis},
      {"master-identity", master_identity},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"five-term", "li2-equiv", "eqhom",       "lift-indep",
                                                 "cech",      "euler",     "welldef",     "scaling",
                                                 "wedge-basis", "master-identity"};
  return names;
}

bool run_suite(const SuiteConfig& cfg, std::ostream& out) {
  const auto it = suites().find(cfg.suite);
  if (it == suites().end()) throw Error(ErrorCode::Precondition, "unknown suite '" + cfg.suite + "'");
  if (cfg.samples < 1) throw Error(ErrorCode::Precondition, "need at least one sample");
  if (cfg.size.degree < 1 || cfg.size.height < 1) throw Error(ErrorCode::Precondition, "degree and height must be positive");
  const Context ctx{cfg, RingSpec::make(cfg.xvars, cfg.tvars)};
  const int samples = cfg.suite == "master-identity" ? 1 : cfg.samples;
  out << "suite " << cfg.suite << " seed " << cfg.seed << " samples " << samples << " xvars " << cfg.xvars
      << " tvars " << cfg.tvars << " deg " << cfg.size.degree << " height " << cfg.size.height << "\n";
  Rng rng(cfg.seed);
  int passed = 0;
  for (int k = 0; k < samples; ++k) {
    int regenerated = 0;
    Outcome o;
    try {
      for (;;) {
        try {
          o = it->second(rng, ctx, k);
          break;
        } catch (const Error& e) {
          if (!degenerate(e)) throw;
          if (++regenerated >= Rng::kRetryCap) {
            throw Error(ErrorCode::GeneratorExhausted, "sample regenerated " + std::to_string(regenerated) + " times");
          }
        }
      }
    } catch (const Error& e) {
      out << "sample " << k + 1 << ": ERROR " << e.what() << "\n";
      continue;
    }
    out << "sample " << k + 1 << ": " << (o.pass ? "PASS" : "FAIL");
    if (regenerated > 0) out << " (" << regenerated << " regenerated)";
    out << "\n";
    if (!o.pass) {
      for (const auto& [name, value] : o.fields) out << "  " << name << " = " << value << "\n";
    }
    passed += o.pass ? 1 : 0;
  }
  out << cfg.suite << ": " << passed << " passed, " << samples - passed << " failed\n";
  return passed == samples;
}

}  // namespace infinireg
