#include "infinireg/algebra/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace infinireg {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string var_name(const VarNames& names, int var) {
  if (var >= 0 && static_cast<std::size_t>(var) < names.size()) {
    return names[static_cast<std::size_t>(var)];
  }
  return "x" + std::to_string(var + 1);
}

Poly::Poly(long c) {
  if (c != 0) terms_.push_back({Monomial{}, Rational(c)});
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly Poly::variable(int var) { return monomial(Monomial::variable(var)); }

Poly Poly::monomial(Monomial m, Rational c) {
  Poly p;
  if (c != 0) p.terms_.push_back({m, std::move(c)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  // Sort packed keys rather than terms so no rational is moved during sorting.
  std::vector<std::pair<std::uint64_t, std::uint32_t>> keys;
  keys.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    keys.emplace_back(terms[i].mono.bits(), static_cast<std::uint32_t>(i));
  }
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  Poly p;
  p.terms_.reserve(terms.size());
  for (const auto& [bits, idx] : keys) {
    Term& t = terms[idx];
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      continue;
    }
    if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
    p.terms_.push_back(std::move(t));
  }
  if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
  return p;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1;
}

Rational Poly::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::Internal, "polynomial is not constant");
  return constant_term();
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return 0;
}

unsigned Poly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

unsigned Poly::degree(int var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(var));
  return d;
}

unsigned Poly::var_mask() const {
  unsigned mask = 0;
  for (const auto& t : terms_) {
    for (int j = 0; j < Monomial::kMaxVars; ++j) {
      if (t.mono.exponent(j) != 0) mask |= 1u << j;
    }
  }
  return mask;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

// Merge two sorted term lists, b scaled by sign.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back({b[j].mono, negate_b ? Rational(-b[j].coef) : b[j].coef});
      ++j;
    } else {
      Rational c = negate_b ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b.scaled(a.terms_[0].coef);
  if (b.is_constant()) return a.scaled(b.terms_[0].coef);
  std::vector<Term> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) prods.push_back({s.mono * t.mono, s.coef * t.coef});
  }
  return Poly::from_terms(std::move(prods));
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return {};
  Poly r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Poly Poly::times_monomial(Monomial m) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly result(1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

Poly Poly::derivative(int var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const unsigned e = t.mono.exponent(var);
    if (e == 0) continue;
    out.push_back({t.mono.lower(var), t.coef * e});
  }
  // Lowering one exponent preserves relative graded-lex order.
  Poly r;
  r.terms_ = std::move(out);
  return r;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (int j = 0; j < Monomial::kMaxVars; ++j) {
      const unsigned e = t.mono.exponent(j);
      if (e == 0) continue;
      if (static_cast<std::size_t>(j) >= point.size()) {
        throw Error(ErrorCode::Precondition, "evaluation point has too few coordinates");
      }
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), point[static_cast<std::size_t>(j)].get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), point[static_cast<std::size_t>(j)].get_den_mpz_t(), e);
      v *= p;
    }
    sum += v;
  }
  return sum;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (is_zero()) return Poly{};
  if (d.is_constant()) return scaled(Rational(1) / d.terms_[0].coef);
  if (total_degree() < d.total_degree()) return std::nullopt;
  const Term& lead = d.terms_.front();
  const Rational inv_lead = Rational(1) / lead.coef;
  Poly rem = *this;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const Term& r = rem.terms_.front();
    if (!lead.mono.divides(r.mono)) return std::nullopt;
    Term q{r.mono / lead.mono, r.coef * inv_lead};
    rem -= d.times_monomial(q.mono).scaled(q.coef);
    quot.push_back(std::move(q));
    if (!rem.is_zero() && rem.total_degree() < d.total_degree()) return std::nullopt;
  }
  return Poly::from_terms(std::move(quot));
}

Poly Poly::primitive() const {
  if (is_zero()) return {};
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (terms_.front().coef < 0) factor = -factor;
  if (factor == 1) return *this;
  return scaled(factor);
}

Poly Poly::monic() const {
  if (is_zero() || terms_.front().coef == 1) return *this;
  return scaled(Rational(1) / terms_.front().coef);
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].mono <=> b.terms_[i].mono; c != 0) return c;
    const int cmp = ::cmp(a.terms_[i].coef, b.terms_[i].coef);
    if (cmp != 0) return cmp < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

namespace {

std::string monomial_string(Monomial m, const VarNames& names) {
  std::string out;
  for (int j = 0; j < Monomial::kMaxVars; ++j) {
    const unsigned e = m.exponent(j);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(names, j);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string Poly::to_string(const VarNames& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coef < 0;
    const Rational mag = negative ? Rational(-t.coef) : t.coef;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += monomial_string(t.mono, names);
    } else {
      out += mag.get_str() + '*' + monomial_string(t.mono, names);
    }
  }
  return out;
}

}  // namespace infinireg
