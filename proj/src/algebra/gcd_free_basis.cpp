#include "infinireg/algebra/gcd_free_basis.hpp"

#include <algorithm>

namespace infinireg {

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n, unsigned long bound) {
  if (n == 0) throw Error(ErrorCode::Precondition, "cannot factor zero");
  Integer m = abs(n);
  std::vector<std::pair<Integer, unsigned>> out;
  auto strip = [&](unsigned long p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) out.emplace_back(Integer(p), e);
  };
  strip(2);
  for (unsigned long p = 3; p <= bound; p += 2) {
    if (Integer(p) * p > m) break;
    strip(p);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

namespace {

void insert_integer(std::vector<Integer>& basis, Integer q) {
  std::vector<Integer> work{std::move(q)};
  while (!work.empty()) {
    Integer v = std::move(work.back());
    work.pop_back();
    if (v <= 1) continue;
    bool split = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] == v) {
        split = true;
        break;
      }
      Integer g;
      mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), basis[i].get_mpz_t());
      if (g == 1) continue;
      Integer b = basis[i];
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
      work.push_back(g);
      work.push_back(b / g);
      work.push_back(v / g);
      split = true;
      break;
    }
    if (!split) basis.push_back(std::move(v));
  }
}

void insert_poly(std::vector<Poly>& basis, const Poly& q) {
  std::vector<Poly> work{q.monic()};
  while (!work.empty()) {
    Poly v = std::move(work.back());
    work.pop_back();
    if (v.is_constant()) continue;
    v = v.monic();
    bool split = false;
    for (int j = 0; j < Monomial::kMaxVars && !split; ++j) {
      if (!v.uses_var(j)) continue;
      Poly g = gcd(v, v.derivative(j));
      if (g.is_constant()) continue;
      work.push_back(*v.divide_exact(g));
      work.push_back(std::move(g));
      split = true;
    }
    if (split) continue;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] == v) {
        split = true;
        break;
      }
      Poly g = gcd(v, basis[i]);
      if (g.is_constant()) continue;
      Poly b = basis[i];
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
      work.push_back(*b.divide_exact(g));
      work.push_back(*v.divide_exact(g));
      work.push_back(std::move(g));
      split = true;
      break;
    }
    if (!split) basis.push_back(std::move(v));
  }
}

void add_constant(std::vector<Integer>& ints, const Rational& c) {
  for (const Integer* part : {&c.get_num(), &c.get_den()}) {
    if (*part == 0) continue;
    for (auto& [p, e] : factor_integer(*part)) insert_integer(ints, p);
  }
}

// Strips the rational content and returns it; p becomes monic.
Rational split_content(Poly& p) {
  const Rational lc = p.leading_coef();
  p = p.monic();
  return lc;
}

}  // namespace

GcdFreeBasis GcdFreeBasis::build(std::span<const Poly> inputs) {
  GcdFreeBasis basis;
  for (const auto& in : inputs) {
    if (in.is_zero()) throw Error(ErrorCode::Precondition, "gcd-free basis of zero");
    Poly p = in;
    add_constant(basis.integers_, split_content(p));
    insert_poly(basis.elements_, p);
  }
  std::sort(basis.integers_.begin(), basis.integers_.end());
  std::sort(basis.elements_.begin(), basis.elements_.end(),
            [](const Poly& a, const Poly& b) { return a < b; });
  return basis;
}

GcdFreeBasis GcdFreeBasis::build(std::span<const RatFunc> inputs) {
  std::vector<Poly> polys;
  for (const auto& f : inputs) {
    if (f.is_zero()) throw Error(ErrorCode::Precondition, "gcd-free basis of zero");
    polys.push_back(f.num());
    polys.push_back(f.den());
  }
  return build(std::span<const Poly>(polys));
}

std::vector<long> GcdFreeBasis::exponents(const Poly& input) const {
  if (input.is_zero()) throw Error(ErrorCode::Precondition, "exponents of zero");
  std::vector<long> exps(rank(), 0);
  Poly p = input;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    while (!p.is_constant()) {
      auto q = p.divide_exact(elements_[i]);
      if (!q) break;
      p = std::move(*q);
      ++exps[integers_.size() + i];
    }
  }
  if (!p.is_constant()) {
    throw Error(ErrorCode::Precondition, "polynomial " + input.to_string() +
                                             " does not factor over the basis");
  }
  const Rational c = p.constant_value();
  for (int side = 0; side < 2; ++side) {
    Integer rest = abs(side == 0 ? c.get_num() : c.get_den());
    for (std::size_t i = 0; i < integers_.size(); ++i) {
      while (mpz_divisible_p(rest.get_mpz_t(), integers_[i].get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), integers_[i].get_mpz_t());
        exps[i] += side == 0 ? 1 : -1;
      }
    }
    if (rest != 1) {
      throw Error(ErrorCode::Precondition,
                  "constant " + c.get_str() + " does not factor over the basis");
    }
  }
  return exps;
}

std::vector<long> GcdFreeBasis::exponents(const RatFunc& f) const {
  auto e = exponents(f.num());
  const auto d = exponents(f.den());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= d[i];
  return e;
}

int GcdFreeBasis::sign(const Poly& p) const {
  auto exps = exponents(p);
  const RatFunc r = reconstruct(exps);
  return r.num() == p ? 1 : -1;
}

RatFunc GcdFreeBasis::reconstruct(const std::vector<long>& exps) const {
  if (exps.size() != rank()) throw Error(ErrorCode::Precondition, "exponent vector length");
  Poly num(1);
  Poly den(1);
  Rational c = 1;
  for (std::size_t i = 0; i < integers_.size(); ++i) {
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), integers_[i].get_mpz_t(),
               static_cast<unsigned long>(std::labs(exps[i])));
    if (exps[i] > 0) c *= Rational(pw);
    if (exps[i] < 0) c /= Rational(pw);
  }
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const long e = exps[integers_.size() + i];
    if (e > 0) num *= elements_[i].pow(static_cast<unsigned>(e));
    if (e < 0) den *= elements_[i].pow(static_cast<unsigned>(-e));
  }
  return RatFunc(num.scaled(c), den);
}

std::string GcdFreeBasis::to_string(const VarNames& names) const {
  std::string out = "{";
  bool first = true;
  for (const auto& p : integers_) {
    out += (first ? "" : ", ") + p.get_str();
    first = false;
  }
  for (const auto& p : elements_) {
    out += (first ? "" : ", ") + p.to_string(names);
    first = false;
  }
  return out + "}";
}

bool unit_wedge_vanishes(std::span<const UnitWedge> terms) {
  std::vector<RatFunc> all;
  for (const auto& t : terms) {
    if (t.coef == 0) continue;
    if (t.left.is_zero() || t.right.is_zero()) {
      throw Error(ErrorCode::Precondition, "wedge of a non-unit");
    }
    all.push_back(t.left);
    all.push_back(t.right);
  }
  if (all.empty()) return true;
  const GcdFreeBasis basis = GcdFreeBasis::build(std::span<const RatFunc>(all));
  const std::size_t r = basis.rank();
  std::vector<Rational> mat(r * r, Rational(0));
  for (const auto& t : terms) {
    if (t.coef == 0) continue;
    const auto a = basis.exponents(t.left);
    const auto b = basis.exponents(t.right);
    for (std::size_t i = 0; i < r; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < r; ++j) {
        if (b[j] == 0 || i == j) continue;
        const Rational v = t.coef * a[i] * b[j];
        mat[i * r + j] += v;
        mat[j * r + i] -= v;
      }
    }
  }
  return std::all_of(mat.begin(), mat.end(), [](const Rational& q) { return q == 0; });
}

}  // namespace infinireg
