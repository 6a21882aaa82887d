#include "infinireg/symalg/truncsym.hpp"

namespace infinireg {

namespace {

void add_into(TruncSymElement::TermMap& terms, Monomial mono, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(mono, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

std::string monomial_string(Monomial mono, const RingSpec& spec) {
  std::string out;
  for (int i = 0; i < Monomial::kMaxVars; ++i) {
    for (unsigned e = 0; e < mono.exponent(i); ++e) {
      if (!out.empty()) out += "*";
      out += var_name(spec.tnames, i);
    }
  }
  return out;
}

std::string terms_string(const TruncSymElement::TermMap& terms, const RingSpec& spec) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [mono, c] : terms) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string(spec.xnames) + ")";
    if (!mono.is_one()) out += "*" + monomial_string(mono, spec);
  }
  return out;
}

}  // namespace

TruncSymElement::TruncSymElement(const RatFunc& c) { add_term(Monomial(), c); }

TruncSymElement TruncSymElement::generator(int i) { return monomial(Monomial::variable(i), RatFunc(1)); }

TruncSymElement TruncSymElement::monomial(Monomial mono, const RatFunc& c) {
  TruncSymElement e;
  e.add_term(mono, c);
  return e;
}

TruncSymElement TruncSymElement::from_ivec(const IVec& v) {
  TruncSymElement e;
  for (std::size_t i = 0; i < v.size(); ++i) e.add_term(Monomial::variable(static_cast<int>(i)), v[i]);
  return e;
}

TruncSymElement TruncSymElement::lift(const SqZeroElement& a) {
  TruncSymElement e = from_ivec(a.v);
  e.add_term(Monomial(), a.u);
  return e;
}

void TruncSymElement::add_term(Monomial mono, const RatFunc& c) {
  if (mono.degree() > kMaxDegree) return;
  add_into(terms_, mono, c);
}

RatFunc TruncSymElement::coeff(Monomial mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? RatFunc() : it->second;
}

TruncSymElement TruncSymElement::part(unsigned degree) const {
  TruncSymElement out;
  for (const auto& [mono, c] : terms_) {
    if (mono.degree() == degree) out.terms_.emplace(mono, c);
  }
  return out;
}

TruncSymElement TruncSymElement::positive_part() const {
  TruncSymElement out = *this;
  out.terms_.erase(Monomial());
  return out;
}

unsigned TruncSymElement::min_degree() const {
  unsigned d = kMaxDegree + 1;
  for (const auto& [mono, c] : terms_) d = std::min(d, mono.degree());
  return d;
}

IVec TruncSymElement::linear_part(int m) const {
  IVec v = ivec_zero(m);
  for (const auto& [mono, c] : terms_) {
    if (mono.degree() != 1) continue;
    for (int i = 0; i < m; ++i) {
      if (mono.exponent(i) == 1) v[static_cast<std::size_t>(i)] = c;
    }
  }
  return v;
}

TruncSymElement TruncSymElement::operator-() const {
  TruncSymElement out = *this;
  for (auto& [mono, c] : out.terms_) c = -c;
  return out;
}

TruncSymElement& TruncSymElement::operator+=(const TruncSymElement& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

TruncSymElement& TruncSymElement::operator-=(const TruncSymElement& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

TruncSymElement operator*(const TruncSymElement& a, const TruncSymElement& b) {
  TruncSymElement out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.degree() + mb.degree() > TruncSymElement::kMaxDegree) continue;
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

TruncSymElement trunc_mul(const TruncSymElement& a, const TruncSymElement& b) { return a * b; }

TruncSymElement TruncSymElement::scaled(const RatFunc& c) const {
  if (c.is_zero()) return {};
  TruncSymElement out = *this;
  for (auto& [mono, v] : out.terms_) v = v * c;
  return out;
}

TruncSymElement TruncSymElement::pow(unsigned k) const {
  TruncSymElement out(1);
  for (unsigned i = 0; i < k; ++i) out *= *this;
  return out;
}

TruncSymElement TruncSymElement::inverse() const {
  const RatFunc c = constant();
  if (c.is_zero()) throw Error(ErrorCode::NonUnit, "truncated element with zero base part");
  const RatFunc ci = c.inverse();
  const TruncSymElement e = positive_part().scaled(ci);
  const TruncSymElement e2 = e * e;
  return (TruncSymElement(1) - e + e2 - e2 * e).scaled(ci);
}

TruncSymElement TruncSymElement::partial_t(int i) const {
  TruncSymElement out;
  for (const auto& [mono, c] : terms_) {
    const unsigned e = mono.exponent(i);
    if (e == 0) continue;
    out.add_term(mono.lower(i), c.scaled(Rational(e)));
  }
  return out;
}

TruncSymElement TruncSymElement::partial_x(int j) const {
  return map_coeffs([j](const RatFunc& c) { return c.derivative(j); });
}

TruncSymElement TruncSymElement::map_coeffs(const std::function<RatFunc(const RatFunc&)>& fn) const {
  TruncSymElement out;
  for (const auto& [mono, c] : terms_) out.add_term(mono, fn(c));
  return out;
}

std::string TruncSymElement::to_string(const RingSpec& spec) const { return terms_string(terms_, spec); }

TruncSymElement trunc_log1p(const TruncSymElement& e) {
  if (!e.constant().is_zero()) throw Error(ErrorCode::Precondition, "log1p argument has a base part");
  const TruncSymElement e2 = e * e;
  return e - e2.scaled(Rational(1, 2)) + (e2 * e).scaled(Rational(1, 3));
}

TruncSymElement trunc_exp(const TruncSymElement& e) {
  if (!e.constant().is_zero()) throw Error(ErrorCode::Precondition, "exp argument has a base part");
  const TruncSymElement e2 = e * e;
  return TruncSymElement(1) + e + e2.scaled(Rational(1, 2)) + (e2 * e).scaled(Rational(1, 6));
}

Sym3Class Sym3Class::from(const TruncSymElement& e) {
  Sym3Class out;
  for (const auto& [mono, c] : e.terms()) {
    if (mono.degree() == 3) out.terms_.emplace(mono, c);
  }
  return out;
}

Sym3Class Sym3Class::product(const IVec& a, const IVec& b, const IVec& c) {
  return from(TruncSymElement::from_ivec(a) * TruncSymElement::from_ivec(b) *
              TruncSymElement::from_ivec(c));
}

RatFunc Sym3Class::coeff(Monomial mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? RatFunc() : it->second;
}

Sym3Class Sym3Class::operator-() const {
  Sym3Class out = *this;
  for (auto& [mono, c] : out.terms_) c = -c;
  return out;
}

Sym3Class& Sym3Class::operator+=(const Sym3Class& o) {
  for (const auto& [mono, c] : o.terms_) add_into(terms_, mono, c);
  return *this;
}

Sym3Class& Sym3Class::operator-=(const Sym3Class& o) {
  for (const auto& [mono, c] : o.terms_) add_into(terms_, mono, -c);
  return *this;
}

Sym3Class Sym3Class::scaled(const RatFunc& c) const {
  if (c.is_zero()) return {};
  Sym3Class out = *this;
  for (auto& [mono, v] : out.terms_) v = v * c;
  return out;
}

Sym3Class Sym3Class::map_coeffs(const std::function<RatFunc(const RatFunc&)>& fn) const {
  Sym3Class out;
  for (const auto& [mono, c] : terms_) add_into(out.terms_, mono, fn(c));
  return out;
}

TruncSymElement Sym3Class::as_element() const {
  TruncSymElement out;
  for (const auto& [mono, c] : terms_) out += TruncSymElement::monomial(mono, c);
  return out;
}

std::string Sym3Class::to_string(const RingSpec& spec) const { return terms_string(terms_, spec); }

TruncHom::TruncHom(std::vector<TruncSymElement> ximages, std::vector<TruncSymElement> timages)
    : ximages_(std::move(ximages)), timages_(std::move(timages)) {
  for (std::size_t j = 0; j < ximages_.size(); ++j) {
    base_point_.push_back(ximages_[j].constant());
    shifts_.push_back(ximages_[j].positive_part());
    if (base_point_.back() != RatFunc::variable(static_cast<int>(j))) base_is_identity_ = false;
  }
  for (const auto& t : timages_) {
    if (!t.constant().is_zero()) {
      throw Error(ErrorCode::Precondition, "image of a generator of I has a base part");
    }
  }
}

TruncHom TruncHom::identity(int n, int m) {
  std::vector<TruncSymElement> xs;
  std::vector<TruncSymElement> ts;
  for (int j = 0; j < n; ++j) xs.emplace_back(RatFunc::variable(j));
  for (int i = 0; i < m; ++i) ts.push_back(TruncSymElement::generator(i));
  return TruncHom(std::move(xs), std::move(ts));
}

TruncHom TruncHom::shift(const Splitting& d) {
  std::vector<TruncSymElement> xs;
  std::vector<TruncSymElement> ts;
  for (int j = 0; j < d.n(); ++j) {
    xs.push_back(TruncSymElement(RatFunc::variable(j)) + TruncSymElement::from_ivec(d.image(j)));
  }
  for (int i = 0; i < d.m(); ++i) ts.push_back(TruncSymElement::generator(i));
  return TruncHom(std::move(xs), std::move(ts));
}

TruncHom TruncHom::shift_inverse(const Splitting& d) {
  // psi(x_j) = x_j - sum_k psi(D_jk) t_k, solved by iteration; each round
  // fixes one more degree.
  TruncHom psi = identity(d.n(), d.m());
  for (unsigned round = 0; round < TruncSymElement::kMaxDegree; ++round) {
    std::vector<TruncSymElement> xs;
    for (int j = 0; j < d.n(); ++j) {
      TruncSymElement img(RatFunc::variable(j));
      const IVec& dj = d.image(j);
      for (std::size_t k = 0; k < dj.size(); ++k) {
        if (dj[k].is_zero()) continue;
        img -= psi.apply(dj[k]) * TruncSymElement::generator(static_cast<int>(k));
      }
      xs.push_back(std::move(img));
    }
    psi = TruncHom(std::move(xs), psi.timages_);
  }
  return psi;
}

TruncSymElement TruncHom::apply(const RatFunc& c) const {
  auto at = [&](const RatFunc& r) { return base_is_identity_ ? r : r.substitute(base_point_); };
  TruncSymElement out(at(c));
  if (c.is_constant()) return out;
  std::vector<int> active;
  for (std::size_t j = 0; j < shifts_.size(); ++j) {
    if (!shifts_[j].is_zero()) active.push_back(static_cast<int>(j));
  }
  // Taylor expansion to order 3 over sorted multi-indices j <= l <= r with
  // weight 1/alpha!.
  for (std::size_t a = 0; a < active.size(); ++a) {
    const int j = active[a];
    const RatFunc d1 = c.derivative(j);
    if (d1.is_zero()) continue;
    const TruncSymElement& ej = shifts_[static_cast<std::size_t>(j)];
    out += ej.scaled(at(d1));
    for (std::size_t b = a; b < active.size(); ++b) {
      const int l = active[b];
      const RatFunc d2 = d1.derivative(l);
      if (d2.is_zero()) continue;
      const TruncSymElement ejl = ej * shifts_[static_cast<std::size_t>(l)];
      if (ejl.is_zero()) continue;
      out += ejl.scaled(at(d2).scaled(j == l ? Rational(1, 2) : Rational(1)));
      for (std::size_t e = b; e < active.size(); ++e) {
        const int r = active[e];
        const RatFunc d3 = d2.derivative(r);
        if (d3.is_zero()) continue;
        const TruncSymElement ejlr = ejl * shifts_[static_cast<std::size_t>(r)];
        if (ejlr.is_zero()) continue;
        long fact = 1;
        if (j == l && l == r) {
          fact = 6;
        } else if (j == l || l == r) {
          fact = 2;
        }
        out += ejlr.scaled(at(d3).scaled(Rational(1, fact)));
      }
    }
  }
  return out;
}

TruncSymElement TruncHom::apply(const TruncSymElement& b) const {
  std::map<Monomial, TruncSymElement> powers;
  TruncSymElement out;
  for (const auto& [mono, c] : b.terms()) {
    TruncSymElement img = apply(c);
    if (!mono.is_one()) {
      auto it = powers.find(mono);
      if (it == powers.end()) {
        TruncSymElement p(1);
        for (int i = 0; i < Monomial::kMaxVars; ++i) {
          for (unsigned e = 0; e < mono.exponent(i); ++e) p *= timages_.at(static_cast<std::size_t>(i));
        }
        it = powers.emplace(mono, std::move(p)).first;
      }
      img *= it->second;
    }
    out += img;
  }
  return out;
}

TruncSymElement trunc_log_circ(const TruncSymElement& a, const Splitting& d) {
  const RatFunc a0 = a.constant();
  if (a0.is_zero()) throw Error(ErrorCode::NonUnit, "log of an element with zero base part");
  const TruncSymElement base = d.is_zero() ? TruncSymElement(a0) : TruncHom::shift(d).apply(a0);
  return trunc_log1p(a * base.inverse() - TruncSymElement(1));
}

}  // namespace infinireg
