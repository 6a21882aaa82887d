// Multivariate GCD over Q. The heuristic integer-evaluation gcd is tried
// first; recursive primitive polynomial remainder sequences are the fallback.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>

#include "infinireg/algebra/poly.hpp"

namespace infinireg {

namespace {

// coeffs[k] is the coefficient of v^k; coefficients do not involve v.
struct UPoly {
  int var = 0;
  std::vector<Poly> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const Poly& lead() const { return coeffs.back(); }
  void trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  }
};

UPoly to_upoly(const Poly& p, int var) {
  UPoly u;
  u.var = var;
  u.coeffs.resize(p.degree(var) + 1);
  std::vector<std::vector<Term>> buckets(u.coeffs.size());
  for (const auto& t : p.terms()) {
    const unsigned e = t.mono.exponent(var);
    buckets[e].push_back({t.mono.without(var), t.coef});
  }
  for (std::size_t k = 0; k < buckets.size(); ++k) {
    u.coeffs[k] = Poly::from_terms(std::move(buckets[k]));
  }
  u.trim();
  return u;
}

Poly from_upoly(const UPoly& u) {
  Poly out;
  for (std::size_t k = 0; k < u.coeffs.size(); ++k) {
    if (u.coeffs[k].is_zero()) continue;
    out += k == 0 ? u.coeffs[k]
                  : u.coeffs[k].times_monomial(Monomial::variable(u.var, static_cast<unsigned>(k)));
  }
  return out;
}

Poly monomial_gcd(const Poly& a, const Poly& b) {
  Monomial m = a.terms().front().mono;
  for (const auto& t : a.terms()) m = Monomial::gcd(m, t.mono);
  for (const auto& t : b.terms()) m = Monomial::gcd(m, t.mono);
  return Poly::monomial(m);
}

Poly content(const UPoly& u) {
  Poly g;
  for (const auto& c : u.coeffs) {
    if (c.is_zero()) continue;
    if (c.is_constant()) return Poly(1);
    g = gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

UPoly divide_coeffs(const UPoly& u, const Poly& c) {
  if (c.is_constant()) {
    UPoly r = u;
    const Rational inv = Rational(1) / c.constant_value();
    for (auto& k : r.coeffs) k = k.scaled(inv);
    return r;
  }
  UPoly r = u;
  for (auto& k : r.coeffs) {
    auto q = k.divide_exact(c);
    if (!q) throw Error(ErrorCode::Internal, "content does not divide coefficient");
    k = std::move(*q);
  }
  return r;
}

// Primitive part with integer-normalized coefficients.
UPoly primitive_part(const UPoly& u) {
  UPoly r = divide_coeffs(u, content(u));
  Poly whole = from_upoly(r).primitive();
  return to_upoly(whole, u.var);
}

// A pseudo-remainder of a by b (an associate of prem; fine for primitive PRS).
UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const Poly& lb = b.lead();
  while (a.degree() >= b.degree() && !a.coeffs.empty()) {
    const int shift = a.degree() - b.degree();
    const Poly la = a.lead();
    for (auto& c : a.coeffs) c = c * lb;
    for (int k = 0; k <= b.degree(); ++k) {
      a.coeffs[static_cast<std::size_t>(k + shift)] -= b.coeffs[static_cast<std::size_t>(k)] * la;
    }
    a.trim();
  }
  return a;
}

// Images in F_p[v] after evaluating the other variables at a point give an
// upper bound for deg_v gcd(a, b), valid whenever the leading coefficients in
// v survive: a = g a', b = g b' over Z maps to the image, and degrees cannot
// drop there.
constexpr std::uint64_t kPrime = 2147483647;  // 2^31 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) { return a * b % kPrime; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1u) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1u;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

// nullopt when p divides a denominator.
std::optional<std::uint64_t> reduce(const Rational& q) {
  const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  return mulmod(mpz_fdiv_ui(q.get_num_mpz_t(), kPrime), invmod(den));
}

using ModPoly = std::vector<std::uint64_t>;

void mod_trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Image of p in F_p[v]; nullopt if unlucky (denominator or leading
// coefficient vanishes).
std::optional<ModPoly> mod_image(const Poly& p, int var, const std::vector<std::uint64_t>& point) {
  ModPoly out(p.degree(var) + 1, 0);
  for (const auto& t : p.terms()) {
    auto c = reduce(t.coef);
    if (!c) return std::nullopt;
    std::uint64_t v = *c;
    for (int j = 0; j < Monomial::kMaxVars; ++j) {
      if (j == var || t.mono.exponent(j) == 0) continue;
      v = mulmod(v, powmod(point[static_cast<std::size_t>(j)], t.mono.exponent(j)));
    }
    auto& slot = out[t.mono.exponent(var)];
    slot = (slot + v) % kPrime;
  }
  if (out.back() == 0) return std::nullopt;
  return out;
}

std::size_t mod_gcd_degree(ModPoly a, ModPoly b) {
  mod_trim(a);
  mod_trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const std::uint64_t inv = invmod(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t f = mulmod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) {
        a[k + shift] = (a[k + shift] + kPrime - mulmod(f, b[k])) % kPrime;
      }
      mod_trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Upper bound for deg_var gcd(a, b); -1 if two evaluation points were unlucky.
int gcd_degree_bound(const Poly& a, const Poly& b, int var) {
  std::uint64_t state = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(var);
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<std::uint64_t> point(Monomial::kMaxVars);
    for (auto& v : point) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      v = (state >> 17) % kPrime;
    }
    auto ia = mod_image(a, var, point);
    auto ib = mod_image(b, var, point);
    if (!ia || !ib) continue;
    return static_cast<int>(mod_gcd_degree(std::move(*ia), std::move(*ib)));
  }
  return -1;
}

Integer integer_content(const Poly& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
  return g;
}

Integer max_norm(const Poly& p) {
  Integer m = 0;
  for (const auto& t : p.terms()) m = std::max(m, Integer(abs(t.coef.get_num())));
  return m;
}

Poly divide_integer(const Poly& p, const Integer& c) {
  if (c == 1) return p;
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), t.coef.get_num_mpz_t(), c.get_mpz_t());
    terms.push_back({t.mono, Rational(q)});
  }
  return Poly::from_terms(std::move(terms));
}

Poly evaluate_at(const Poly& p, int var, const Integer& xi) {
  std::vector<Integer> powers{Integer(1)};
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    const unsigned e = t.mono.exponent(var);
    while (powers.size() <= e) powers.push_back(powers.back() * xi);
    terms.push_back({t.mono.without(var), Rational(t.coef.get_num() * powers[e])});
  }
  return Poly::from_terms(std::move(terms));
}

std::optional<Poly> interpolate(const Poly& image, int var, const Integer& xi, unsigned max_degree) {
  std::vector<std::pair<Monomial, Integer>> rest;
  for (const auto& t : image.terms()) rest.emplace_back(t.mono, t.coef.get_num());
  const Integer half = xi / 2;
  std::vector<Term> out;
  for (unsigned k = 0; !rest.empty(); ++k) {
    if (k > max_degree) return std::nullopt;
    std::size_t kept = 0;
    for (auto& [mono, c] : rest) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) {
        out.push_back({mono * Monomial::variable(var, k), Rational(r)});
        c -= r;
      }
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
      if (c != 0) rest[kept++] = {mono, c};
    }
    rest.resize(kept);
  }
  return Poly::from_terms(std::move(out));
}

// Heuristic gcd on integer polynomials: evaluate the highest variable at a
// large integer xi, recurse, and read the candidate back from its balanced
// xi-adic digits. A primitive candidate dividing both inputs is the gcd once
// xi exceeds twice the smaller coefficient norm.
std::optional<Poly> heuristic_gcd(const Poly& a, const Poly& b) {
  const Integer ca = integer_content(a);
  const Integer cb = integer_content(b);
  Integer cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  const unsigned mask = a.var_mask() | b.var_mask();
  if (mask == 0) return Poly(Rational(cg));
  const Poly pa = divide_integer(a, ca);
  const Poly pb = divide_integer(b, cb);
  const int var = std::bit_width(mask) - 1;
  const unsigned max_degree = std::min(pa.degree(var), pb.degree(var));
  Integer xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * std::max(pa.degree(var), pb.degree(var)) > 20000) break;
    const Poly ea = evaluate_at(pa, var, xi);
    const Poly eb = evaluate_at(pb, var, xi);
    if (!ea.is_zero() && !eb.is_zero()) {
      if (auto image = heuristic_gcd(ea, eb)) {
        if (auto cand = interpolate(*image, var, xi, max_degree); cand && !cand->is_zero()) {
          const Poly g = divide_integer(*cand, integer_content(*cand));
          if (pa.divide_exact(g) && pb.divide_exact(g)) return g.scaled(Rational(cg));
        }
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.size() == 1 || b.size() == 1) return monomial_gcd(a, b);
  if (a == b) return a.monic();

  const unsigned mask_a = a.var_mask();
  const unsigned mask_b = b.var_mask();
  const unsigned common = mask_a & mask_b;
  if (common == 0) return Poly(1);

  // A variable present in only one input cannot occur in the gcd.
  if (const unsigned only_a = mask_a & ~mask_b; only_a != 0) {
    return gcd(content(to_upoly(a, std::countr_zero(only_a))), b);
  }
  if (const unsigned only_b = mask_b & ~mask_a; only_b != 0) {
    return gcd(a, content(to_upoly(b, std::countr_zero(only_b))));
  }

  // A variable absent from the gcd can be removed by taking contents.
  int absent = -1;
  int var = -1;
  int best_bound = 1 << 30;
  for (int j = 0; j < Monomial::kMaxVars; ++j) {
    if (!(common & (1u << j))) continue;
    const int bound = gcd_degree_bound(a, b, j);
    if (bound == 0) {
      if (absent < 0 || a.degree(j) + b.degree(j) > a.degree(absent) + b.degree(absent)) absent = j;
    } else if (bound > 0 && bound < best_bound) {
      best_bound = bound;
      var = j;
    }
  }
  if (absent >= 0) {
    const Poly ca = content(to_upoly(a, absent));
    if (ca.is_constant()) return Poly(1);
    const Poly cb = content(to_upoly(b, absent));
    if (cb.is_constant()) return Poly(1);
    return gcd(ca, cb);
  }

  if (a.total_degree() >= b.total_degree()) {
    if (a.divide_exact(b).has_value()) return b.monic();
  } else if (b.divide_exact(a).has_value()) {
    return a.monic();
  }

  if (auto g = heuristic_gcd(a.primitive(), b.primitive())) return g->monic();

  // Main variable: the smallest gcd degree bound, else the smallest degree.
  if (var < 0) {
    unsigned best = ~0u;
    for (int j = 0; j < Monomial::kMaxVars; ++j) {
      if (!(common & (1u << j))) continue;
      const unsigned d = std::max(a.degree(j), b.degree(j));
      if (d < best) {
        best = d;
        var = j;
      }
    }
  }

  UPoly ua = to_upoly(a, var);
  UPoly ub = to_upoly(b, var);
  const Poly ca = content(ua);
  const Poly cb = content(ub);
  const Poly cg = gcd(ca, cb);
  ua = primitive_part(ua);
  ub = primitive_part(ub);
  if (ua.degree() < ub.degree()) std::swap(ua, ub);

  while (true) {
    if (ub.degree() == 0) {
      return cg.monic();
    }
    UPoly r = pseudo_remainder(ua, ub);
    if (r.coeffs.empty()) break;
    ua = std::move(ub);
    ub = primitive_part(r);
  }
  return (cg * from_upoly(ub)).monic();
}

}  // namespace infinireg
