#include "infinireg/bloch/bloch.hpp"

namespace infinireg {

namespace {

template <class Map>
void accumulate(Map& terms, const typename Map::key_type& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

std::string coef_prefix(const Rational& c, bool first) {
  std::string out;
  if (c < 0) {
    out = first ? "-" : " - ";
  } else if (!first) {
    out = " + ";
  }
  return out + Rational(abs(c)).get_str() + "*";
}

std::string paren(const std::string& s) { return "(" + s + ")"; }

}  // namespace

BlochSum BlochSum::generator(const SqZeroElement& a, const Rational& c) {
  BlochSum s;
  s.add(a, c);
  return s;
}

void BlochSum::add(const SqZeroElement& a, const Rational& c) {
  if (!is_flat(a)) {
    throw Error(ErrorCode::FlatnessViolation, "generator with base part " + a.u.to_string() +
                                                  " is not flat");
  }
  accumulate(terms_, a, c);
}

BlochSum& BlochSum::operator+=(const BlochSum& o) {
  for (const auto& [a, c] : o.terms_) accumulate(terms_, a, c);
  return *this;
}

BlochSum BlochSum::scaled(const Rational& c) const {
  BlochSum out;
  if (c == 0) return out;
  for (const auto& [a, k] : terms_) out.terms_.emplace(a, k * c);
  return out;
}

std::string BlochSum::to_string(const RingSpec& spec) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [a, c] : terms_) {
    out += coef_prefix(c, out.empty()) + "[" + a.to_string(spec) + "]";
  }
  return out;
}

InfBlochSum InfBlochSum::generator(const RatFunc& u, const IVec& alpha, const Rational& c) {
  InfBlochSum s;
  s.add(u, alpha, c);
  return s;
}

void InfBlochSum::add(const RatFunc& u, const IVec& alpha, const Rational& c) {
  if (u.is_zero() || u.is_one()) {
    throw Error(ErrorCode::FlatnessViolation, "base point " + u.to_string() + " is not flat");
  }
  if (ivec_is_zero(alpha)) return;
  accumulate(terms_, Key(u, alpha), c);
}

InfBlochSum& InfBlochSum::operator+=(const InfBlochSum& o) {
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, c);
  return *this;
}

InfBlochSum InfBlochSum::scaled(const Rational& c) const {
  InfBlochSum out;
  if (c == 0) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
  return out;
}

BlochSum InfBlochSum::expand() const {
  BlochSum out;
  for (const auto& [key, c] : terms_) {
    const auto& [u, alpha] = key;
    out.add({u, alpha}, c);
    out.add(SqZeroElement::base(u, static_cast<int>(alpha.size())), -c);
  }
  return out;
}

std::string InfBlochSum::to_string(const RingSpec& spec) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    const auto& [u, alpha] = key;
    out += coef_prefix(c, out.empty()) + "([" + paren(u.to_string(spec.xnames)) + " , " +
           ivec_to_string(alpha, spec) + "])";
  }
  return out;
}

bool WedgeTerm::is_trivial() const {
  switch (kind) {
    case WedgeKind::G1: return ivec_is_zero(alpha) || ivec_is_zero(beta);
    case WedgeKind::G2: return ivec_is_zero(alpha) || right.is_one();
    case WedgeKind::Base: return left.is_one() || right.is_one();
  }
  return false;
}

std::string WedgeTerm::to_string(const RingSpec& spec) const {
  switch (kind) {
    case WedgeKind::G1:
      return "G1(" + ivec_to_string(alpha, spec) + ", " + ivec_to_string(beta, spec) + ")";
    case WedgeKind::G2:
      return "G2(" + ivec_to_string(alpha, spec) + ", " + right.to_string(spec.xnames) + ")";
    case WedgeKind::Base:
      return "BASE(" + left.to_string(spec.xnames) + ", " + right.to_string(spec.xnames) + ")";
  }
  return {};
}

FWedgeSum FWedgeSum::single(const WedgeTerm& t, const Rational& c) {
  FWedgeSum s;
  s.add(t, c);
  return s;
}

void FWedgeSum::add(const WedgeTerm& t, const Rational& c) {
  const bool non_unit = (t.kind == WedgeKind::G2 && t.right.is_zero()) ||
                        (t.kind == WedgeKind::Base && (t.left.is_zero() || t.right.is_zero()));
  if (non_unit) throw Error(ErrorCode::NonUnit, "wedge of a non-unit");
  if (t.is_trivial()) return;
  accumulate(terms_, t, c);
}

std::vector<UnitWedge> FWedgeSum::base_part() const {
  std::vector<UnitWedge> out;
  for (const auto& [t, c] : terms_) {
    if (t.kind == WedgeKind::Base) out.push_back({c, t.left, t.right});
  }
  return out;
}

bool FWedgeSum::base_part_vanishes() const {
  const auto parts = base_part();
  return unit_wedge_vanishes(parts);
}

FWedgeSum FWedgeSum::without_base() const {
  FWedgeSum out;
  for (const auto& [t, c] : terms_) {
    if (t.kind != WedgeKind::Base) out.terms_.emplace(t, c);
  }
  return out;
}

FWedgeSum& FWedgeSum::operator+=(const FWedgeSum& o) {
  for (const auto& [t, c] : o.terms_) accumulate(terms_, t, c);
  return *this;
}

FWedgeSum FWedgeSum::scaled(const Rational& c) const {
  FWedgeSum out;
  if (c == 0) return out;
  for (const auto& [t, k] : terms_) out.terms_.emplace(t, k * c);
  return out;
}

std::string FWedgeSum::to_string(const RingSpec& spec) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [t, c] : terms_) out += coef_prefix(c, out.empty()) + t.to_string(spec);
  return out;
}

namespace {

// (1 - a) ^ a for a = u(1 + alpha/u), 1 - a = (1 - u)(1 + alpha/(u - 1)),
// without the Base(1 - u, u) term.
void add_infinitesimal_delta(FWedgeSum& out, const RatFunc& u, const IVec& alpha, const Rational& c) {
  const IVec over_u = ivec_scale(u.inverse(), alpha);
  const IVec over_u1 = ivec_scale((u - 1).inverse(), alpha);
  out.add(WedgeTerm::g2(over_u, u - 1), -c);
  out.add(WedgeTerm::g2(over_u1, u), c);
  out.add(WedgeTerm::g1(over_u1, over_u), c);
}

}  // namespace

FWedgeSum delta(const BlochSum& s) {
  FWedgeSum out;
  for (const auto& [a, c] : s.terms()) {
    out.add(WedgeTerm::base(RatFunc(1) - a.u, a.u), c);
    add_infinitesimal_delta(out, a.u, a.v, c);
  }
  return out;
}

FWedgeSum delta_inf(const InfBlochSum& s) {
  FWedgeSum out;
  for (const auto& [key, c] : s.terms()) add_infinitesimal_delta(out, key.first, key.second, c);
  return out;
}

BlochSum five_term_sum(const SqZeroElement& x, const SqZeroElement& y) {
  auto require_flat = [](const SqZeroElement& a, const char* name) {
    if (!is_flat(a)) {
      throw Error(ErrorCode::FlatnessViolation, std::string("argument ") + name + " is not flat");
    }
  };
  require_flat(x, "x");
  require_flat(y, "y");
  const int m = static_cast<int>(x.v.size());
  const SqZeroElement one = SqZeroElement::base(RatFunc(1), m);
  const SqZeroElement ratio = y / x;
  require_flat(ratio, "y/x");
  const SqZeroElement cross = (one - sq_inv(x)) / (one - sq_inv(y));
  require_flat(cross, "(1-1/x)/(1-1/y)");
  const SqZeroElement comp = (one - x) / (one - y);
  require_flat(comp, "(1-x)/(1-y)");
  BlochSum s;
  s.add(x, 1);
  s.add(y, -1);
  s.add(ratio, 1);
  s.add(cross, -1);
  s.add(comp, 1);
  return s;
}

AbsOneForm logdlog(const FWedgeSum& w, const RingSpec& spec) {
  if (!w.base_part_vanishes()) {
    throw Error(ErrorCode::NotInfinitesimal, "base part of the wedge sum does not vanish");
  }
  AbsOneForm out(spec.n, spec.m);
  for (const auto& [t, c] : w.terms()) {
    switch (t.kind) {
      case WedgeKind::G1:
        out += abs_d(SqZeroElement::infinitesimal(t.beta), spec.n)
                   .times(SqZeroElement::infinitesimal(ivec_scale(RatFunc(c), t.alpha)));
        break;
      case WedgeKind::G2:
        out += abs_d(SqZeroElement::base(t.right, spec.m), spec.n)
                   .times(SqZeroElement::infinitesimal(ivec_scale(t.right.inverse().scaled(c), t.alpha)));
        break;
      case WedgeKind::Base: break;
    }
  }
  return out;
}

}  // namespace infinireg
