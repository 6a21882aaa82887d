// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "infinireg/algebra/gcd_free_basis.hpp"
#include "infinireg/cech/cech.hpp"
#include "infinireg/cli/generators.hpp"
#include "infinireg/homotopy/homotopy.hpp"
#include "infinireg/regulator/regulator.hpp"
#include "oracles/h_oracle.hpp"
#include "oracles/li2_oracle.hpp"
#include "oracles/wedge_oracle.hpp"

using namespace infinireg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Result {
  bool pass = true;
  std::string detail;
};

struct Tally {
  int passed = 0;
  int failed = 0;
  int regenerated = 0;

  std::string summary() const {
    std::ostringstream s;
    s << passed << "/" << passed + failed << " samples";
    if (regenerated) s << ", " << regenerated << " regenerated";
    return s.str();
  }
};

bool degenerate(const Error& e) {
  switch (e.code()) {
    case ErrorCode::FlatnessViolation:
    case ErrorCode::DenominatorVanishes:
    case ErrorCode::NonUnit:
    case ErrorCode::DivisionByZero: return true;
    default: return false;
  }
}

// Draws until `count` samples complete; degenerate draws are redrawn.
void sample(Tally& tally, Rng& rng, int count, const std::function<bool(Rng&, int)>& body) {
  for (int k = 0; k < count; ++k) {
    for (int attempt = 0;; ++attempt) {
      try {
        (body(rng, k) ? tally.passed : tally.failed) += 1;
        break;
      } catch (const Error& e) {
        if (!degenerate(e) || attempt + 1 >= Rng::kRetryCap) {
          tally.failed += 1;
          break;
        }
        tally.regenerated += 1;
      }
    }
  }
}

Result from_tally(const Tally& t, int required) {
  return {t.failed == 0 && t.passed >= required, t.summary()};
}

const RingSpec R11 = RingSpec::make(1, 1);
const RingSpec R12 = RingSpec::make(1, 2);
const RingSpec R22 = RingSpec::make(2, 2);
const std::vector<const RingSpec*> kConfigs = {&R11, &R12, &R22};

Splitting twisted_or_zero(Rng& rng, const RingSpec& spec, int k) {
  return k % 2 ? random_splitting(rng, spec) : Splitting::zero(spec);
}

Result master_identity() {
  const auto start = Clock::now();
  const RatFunc a = RatFunc::variable(0);
  const RatFunc b = RatFunc::variable(1);
  const BlochSum sum = five_term_sum(SqZeroElement{a, {1, 0}}, SqZeroElement{b, {0, 1}});
  const Sym3Class value = li2_first(sum, Splitting::zero(R22));
  const double elapsed = seconds_since(start);
  const bool cubes = oracle::five_cube_identity().is_zero();
  const bool termwise = [&] {
    for (const auto& [e, c] : sum.terms()) {
      if (li2_first(BlochSum::generator(e), Splitting::zero(R22)) != oracle::li2_series(e, Splitting::zero(R22))) {
        return false;
      }
    }
    return true;
  }();
  std::ostringstream d;
  d << "pipeline " << (value.is_zero() ? "0" : "nonzero") << ", oracle cubes " << (cubes ? "0" : "nonzero")
    << ", termwise oracle " << (termwise ? "agrees" : "differs") << ", " << elapsed << " s";
  return {value.is_zero() && cubes && termwise && elapsed < 1.0, d.str()};
}

Result five_term() {
  Tally t;
  Rng rng(2001);
  const auto start = Clock::now();
  for (const RingSpec* spec : kConfigs) {
    sample(t, rng, 25, [&](Rng& r, int) {
      const Splitting d = random_splitting(r, *spec);
      const SqZeroElement x = random_flat_element(r, *spec);
      const SqZeroElement y = random_flat_element(r, *spec);
      return li2_first(five_term_sum(x, y), d).is_zero();
    });
  }
  const double elapsed = seconds_since(start);
  Result res = from_tally(t, 75);
  res.pass = res.pass && elapsed < 10.0;
  res.detail += ", " + std::to_string(elapsed) + " s";
  return res;
}

Result construction_agreement() {
  Tally t;
  Rng rng(2002);
  sample(t, rng, 30, [&](Rng& r, int k) {
    const RingSpec& spec = *kConfigs[static_cast<std::size_t>(k) % 3];
    const Splitting d = twisted_or_zero(r, spec, k);
    const InfBlochSum s = random_inf_bloch(r, spec, 2);
    const Sym3Class first = li2_first(s, d);
    const Sym3Class series = oracle::li2_series(push_inf_bloch(AlgebraHom::identity(spec), s), d);
    return first == li2_second(s, d) && first == series;
  });
  return from_tally(t, 25);
}

Result lift_perturbation() {
  Tally t;
  Rng rng(2003);
  sample(t, rng, 30, [&](Rng& r, int k) {
    const RingSpec& spec = *kConfigs[static_cast<std::size_t>(k) % 3];
    const Splitting d = random_splitting(r, spec);
    const InfBlochSum s = random_inf_bloch(r, spec, 1);
    const auto& [key, c] = *s.terms().begin();
    const auto& [u, alpha] = key;
    const TruncSymElement j_lift = random_homogeneous(r, spec, 2) + random_homogeneous(r, spec, 3);
    const TruncSymElement j_base = random_homogeneous(r, spec, 2) + random_homogeneous(r, spec, 3);
    const TruncSymElement lift = TruncSymElement(u) + TruncSymElement::from_ivec(alpha) + j_lift;
    const TruncSymElement base = TruncSymElement(u) + j_base;
    return li2_second_term(lift, base, d).scaled(RatFunc(c)) == li2_first(s, d);
  });
  return from_tally(t, 25);
}

Result scaling_law() {
  Tally t;
  Rng rng(2004);
  sample(t, rng, 15, [&](Rng& r, int k) {
    const RingSpec& spec = *kConfigs[static_cast<std::size_t>(k) % 3];
    const Rational lambda = r.nonzero_rational(5);
    const InfBlochSum s = random_inf_bloch(r, spec, 2);
    InfBlochSum scaled;
    for (const auto& [key, c] : s.terms()) scaled.add(key.first, ivec_scale(RatFunc(lambda), key.second), c);
    const Splitting d0 = Splitting::zero(spec);
    return li2_first(scaled, d0) == li2_first(s, d0).scaled(RatFunc(lambda * lambda * lambda));
  });
  return from_tally(t, 10);
}

Result closed_forms() {
  const LiftedHom lift = lift_hom(oracle::symbolic_hom());
  const auto one = oracle::family_one();
  const auto two = oracle::family_two();
  const bool first = h_f(lift, one.wedge) == one.expected;
  const bool second = h_f(lift, two.wedge) == two.expected;
  return {first && second,
          std::string("family (i) ") + (first ? "matches" : "differs") + ", family (ii) " + (second ? "matches" : "differs")};
}

Result lift_independence() {
  Tally t;
  Rng rng(2007);
  sample(t, rng, 26, [&](Rng& r, int k) {
    const RingSpec& spec = k % 2 ? R12 : R11;
    const AlgebraHom f = random_hom(r, spec, spec);
    const Splitting d1 = random_splitting(r, spec);
    const Splitting d2 = random_splitting(r, spec);
    const InfBlochSum s = random_inf_bloch(r, spec, 2);
    const LiftCorrections c1 = random_corrections(r, f);
    const LiftCorrections c2 = random_corrections(r, f);
    const FWedgeSum w = delta_inf(s);
    const Sym3Class h1 = homotopy_h(f, d1, d2, w, c1);
    return h1 == homotopy_h(f, d1, d2, w, c2) && h1 == homotopy_hfhat(f, d1, d2, s, c2);
  });
  return from_tally(t, 25);
}

Result eqhom() {
  Tally t;
  Rng rng(2008);
  sample(t, rng, 30, [&](Rng& r, int k) {
    const RingSpec& spec = *kConfigs[static_cast<std::size_t>(k) % 3];
    const AlgebraHom f = random_hom(r, spec, spec);
    const Splitting d1 = random_splitting(r, spec);
    const Splitting d2 = random_splitting(r, spec);
    return eqhom_check(f, d1, d2, random_inf_bloch(r, spec, 2));
  });
  return from_tally(t, 25);
}

Result cech_suite() {
  Tally t;
  Rng rng(2009);
  sample(t, rng, 24, [&](Rng& r, int k) {
    const int opens = 3 + k % 2;
    const RingSpec& spec = (k / 2) % 2 ? R12 : R11;
    CoverSetup cover{spec, {}};
    CoverSetup changed{spec, {}};
    std::vector<InfBlochSum> sections;
    for (int i = 0; i < opens; ++i) {
      cover.splittings.push_back(random_splitting(r, spec));
      changed.splittings.push_back(random_splitting(r, spec));
      sections.push_back(random_inf_bloch(r, spec, 1));
    }
    const CechDatum data = CechDatum::consistent(sections);
    return verify_cocycle(assemble_gamma(cover, data)) && splitting_change_delta(cover, changed, data).is_coboundary &&
           boundary_to_boundary(cover, sections);
  });
  return from_tally(t, 20);
}

Result euler_inverse() {
  Tally t;
  Rng rng(2010);
  sample(t, rng, 120, [&](Rng& r, int k) {
    const RingSpec& spec = *kConfigs[static_cast<std::size_t>(k) % 3];
    const Splitting d = twisted_or_zero(r, spec, k / 3);
    const TruncSymElement g = random_trunc(r, spec, 1);
    // Positive degree in the coordinates of d.
    const TruncSymElement g0 = TruncHom::shift(d).apply(TruncHom::shift_inverse(d).apply(g).positive_part());
    const InfBlochSum s = random_inf_bloch(r, spec, 1);
    const auto& [u, alpha] = s.terms().begin()->first;
    const RelOneForm w =
        li2_difference_form(TruncSymElement(u) + TruncSymElement::from_ivec(alpha), TruncSymElement(u), d);
    return euler_antiderivative(rel_d(g0, d), d) == g0 && rel_d(euler_antiderivative(w, d), d) == w;
  });
  return from_tally(t, 100);
}

Result rho1() {
  Tally t;
  Rng rng(2011);
  const SizeBounds size;
  const unsigned cap = 2 * size.degree;
  sample(t, rng, 30, [&](Rng& r, int k) {
    const RingSpec& spec = *kConfigs[static_cast<std::size_t>(k) % 3];
    const InfBlochSum s = random_inf_bloch(r, spec, 2, size);
    const bool single = exactness_test(logdlog(delta_inf(s), spec), cap).has_value();
    CoverSetup cover{spec, {random_splitting(r, spec, size), random_splitting(r, spec, size)}};
    const CechDatum data = CechDatum::consistent({s, random_inf_bloch(r, spec, 1, size)});
    return single && rho1_sections(cover, data, cap).ok();
  });
  Result res = from_tally(t, 25);
  res.detail += ", cap " + std::to_string(cap);
  return res;
}

// Polynomials of degree 1..3 with coefficients in {-1, 0, 1}, leading
// coefficient 1 (the sign is torsion).
std::vector<oracle::Dense> coefficient_grid() {
  std::vector<oracle::Dense> out;
  for (int deg = 1; deg <= 3; ++deg) {
    int count = 1;
    for (int k = 0; k < deg; ++k) count *= 3;
    for (int code = 0; code < count; ++code) {
      oracle::Dense p;
      int c = code;
      for (int k = 0; k < deg; ++k, c /= 3) p.push_back(c % 3 - 1);
      p.push_back(1);
      out.push_back(p);
    }
  }
  return out;
}

RatFunc to_ratfunc(const oracle::Dense& p) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] != 0) terms.push_back({Monomial::variable(0, static_cast<unsigned>(k)), Rational(p[k])});
  }
  return RatFunc(Poly::from_terms(std::move(terms)));
}

using CoefMatrix = std::vector<std::vector<mpq_class>>;

std::vector<UnitWedge> as_unit_wedges(const CoefMatrix& c, const std::vector<RatFunc>& fs) {
  std::vector<UnitWedge> out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      if (c[i][j] != 0) out.push_back({c[i][j], fs[i], fs[j]});
    }
  }
  return out;
}

// For every subset of the grid of size 2..4: the rank of the GCD-free-basis
// exponent matrix, and vanishing of several wedge sums, against the relation
// lattice found by brute force.
Result wedge_oracle() {
  const std::vector<oracle::Dense> grid = coefficient_grid();
  const std::vector<RatFunc> lifted = [&] {
    std::vector<RatFunc> out;
    for (const auto& p : grid) out.push_back(to_ratfunc(p));
    return out;
  }();
  const long box = 3;
  const long wide_box = 8;
  long widened = 0;
  const std::vector<long> points = {3, 5};
  long sets = 0;
  long comparisons = 0;
  long vanishing = 0;
  long mismatches = 0;
  std::string first_mismatch;
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> visit = [&](std::size_t from) {
    if (idx.size() >= 2) {
      ++sets;
      const std::size_t k = idx.size();
      std::vector<oracle::Dense> polys;
      std::vector<RatFunc> fs;
      for (auto i : idx) {
        polys.push_back(grid[i]);
        fs.push_back(lifted[i]);
      }
      // The factorization rank says whether the box missed a relation; if so
      // the search is repeated in a wider box.
      const std::size_t factored = oracle::factored_rank(polys);
      auto relations = oracle::relation_search(polys, box, points);
      if (oracle::annihilator(relations, k).size() != factored) {
        relations = oracle::relation_search(polys, wide_box, points);
        ++widened;
      }
      const auto ann = oracle::annihilator(relations, k);
      auto record = [&](const std::string& what) {
        ++mismatches;
        if (!first_mismatch.empty()) return;
        first_mismatch = what + " on {";
        for (std::size_t i = 0; i < k; ++i) first_mismatch += (i ? ", " : "") + fs[i].to_string({"x"});
        first_mismatch += "}";
      };
      auto compare = [&](const CoefMatrix& c, const char* what) {
        const bool expected = oracle::wedge_vanishes(c, ann);
        const bool actual = unit_wedge_vanishes(as_unit_wedges(c, fs));
        ++comparisons;
        vanishing += expected ? 1 : 0;
        if (expected != actual) record(what);
      };
      // Rank of the group spanned, from the library's exponent vectors.
      const GcdFreeBasis basis = GcdFreeBasis::build(std::span<const RatFunc>(fs));
      std::vector<std::vector<long>> rows;
      for (const auto& f : fs) rows.push_back(basis.exponents(f));
      const std::size_t library_rank = basis.rank() - oracle::annihilator(rows, basis.rank()).size();
      ++comparisons;
      if (factored != ann.size()) {
        record("search rank " + std::to_string(ann.size()) + " vs factored " + std::to_string(factored));
      }
      if (library_rank != ann.size()) {
        record("rank " + std::to_string(library_rank) + " vs " + std::to_string(ann.size()));
      }
      CoefMatrix c(k, std::vector<mpq_class>(k, 0));
      if (k == 2) {
        c[0][1] = 1;
        compare(c, "pair");
      } else {
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = i + 1; j < k; ++j) c[i][j] = static_cast<long>((i + 1) * (j + 2) % 5) - 2;
        }
        compare(c, "mixed sum");
      }
      // A relation e gives sum_i e_i p_i ^ p_j = 0 for each j.
      if (!relations.empty()) {
        const auto& e = relations.front();
        for (std::size_t j = 0; j < k; ++j) {
          CoefMatrix r(k, std::vector<mpq_class>(k, 0));
          for (std::size_t i = 0; i < k; ++i) {
            if (i < j) r[i][j] += e[i];
            if (i > j) r[j][i] -= e[i];
          }
          compare(r, "relation");
        }
      }
    }
    if (idx.size() == 4) return;
    for (std::size_t i = from; i < grid.size(); ++i) {
      idx.push_back(i);
      visit(i + 1);
      idx.pop_back();
    }
  };
  visit(0);
  std::ostringstream d;
  d << sets << " sets, " << comparisons << " comparisons, " << vanishing << " vanishing, " << mismatches
    << " mismatches, " << widened << " searches widened";
  if (!first_mismatch.empty()) d << ", first: " << first_mismatch;
  return {mismatches == 0, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"master five-term identity", master_identity},
      {"five-term functional equation", five_term},
      {"first and second constructions agree", construction_agreement},
      {"invariance under lift perturbation", lift_perturbation},
      {"scaling law", scaling_law},
      {"closed forms of h", closed_forms},
      {"lift independence of h", lift_independence},
      {"homotopy identity", eqhom},
      {"cech cocycle, coboundary, boundaries", cech_suite},
      {"euler antiderivative inverse", euler_inverse},
      {"rho1 sections exact", rho1},
      {"wedge equality oracle", wedge_oracle},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Result r;
    const auto start = Clock::now();
    try {
      r = criteria[k].second();
    } catch (const std::exception& e) {
      r = {false, std::string("threw ") + e.what()};
    }
    std::cout << "criterion " << k + 1 << ": " << (r.pass ? "PASS" : "FAIL") << "  " << criteria[k].first << " ("
              << r.detail << "; " << seconds_since(start) << " s)" << std::endl;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
