#include "infinireg/squarezero/sqzero.hpp"

namespace infinireg {

RingSpec RingSpec::make(int n, int m) {
  if (n < 1 || n > Monomial::kMaxVars || m < 1 || m > Monomial::kMaxVars) {
    throw Error(ErrorCode::Precondition, "ring needs 1..7 base variables and 1..7 generators of I");
  }
  RingSpec s;
  s.n = n;
  s.m = m;
  static const char* short_names[] = {"x", "y", "z"};
  for (int j = 0; j < n; ++j) {
    s.xnames.push_back(n <= 3 ? short_names[j] : "x" + std::to_string(j + 1));
  }
  for (int i = 0; i < m; ++i) s.tnames.push_back("t" + std::to_string(i + 1));
  return s;
}

IVec ivec_zero(int m) { return IVec(static_cast<std::size_t>(m)); }

bool ivec_is_zero(const IVec& v) {
  for (const auto& c : v) {
    if (!c.is_zero()) return false;
  }
  return true;
}

IVec ivec_add(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b.at(i);
  return r;
}

IVec ivec_sub(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b.at(i);
  return r;
}

IVec ivec_scale(const RatFunc& c, const IVec& v) {
  IVec r(v.size());
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

namespace {

void append_t_terms(std::string& out, const IVec& v, const RingSpec& spec) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string& t = spec.tname(static_cast<int>(i));
    if (v[i].is_one()) {
      out += t;
    } else if (v[i] == RatFunc(-1)) {
      out += "-" + t;
    } else {
      out += "(" + v[i].to_string(spec.xnames) + ")*" + t;
    }
  }
}

}  // namespace

std::string ivec_to_string(const IVec& v, const RingSpec& spec) {
  std::string out;
  append_t_terms(out, v, spec);
  return out.empty() ? "0" : out;
}

std::string SqZeroElement::to_string(const RingSpec& spec) const {
  std::string out;
  if (!u.is_zero()) out = u.to_string(spec.xnames);
  append_t_terms(out, v, spec);
  return out.empty() ? "0" : out;
}

SqZeroElement operator+(const SqZeroElement& a, const SqZeroElement& b) {
  return {a.u + b.u, ivec_add(a.v, b.v)};
}

SqZeroElement operator-(const SqZeroElement& a, const SqZeroElement& b) {
  return {a.u - b.u, ivec_sub(a.v, b.v)};
}

SqZeroElement operator-(const SqZeroElement& a) { return {-a.u, ivec_scale(RatFunc(-1), a.v)}; }

SqZeroElement sq_mul(const SqZeroElement& a, const SqZeroElement& b) {
  if (a.v.size() != b.v.size()) throw Error(ErrorCode::Precondition, "ring shapes differ");
  return {a.u * b.u, ivec_add(ivec_scale(a.u, b.v), ivec_scale(b.u, a.v))};
}

SqZeroElement sq_inv(const SqZeroElement& a) {
  if (a.u.is_zero()) {
    throw Error(ErrorCode::NonUnit, "element with zero base part is not a unit");
  }
  const RatFunc inv = a.u.inverse();
  return {inv, ivec_scale(-(inv * inv), a.v)};
}

bool is_flat(const SqZeroElement& a) { return !a.u.is_zero() && !a.u.is_one(); }

SqZeroElement scaling_endo(const Rational& lambda, const SqZeroElement& a) {
  return {a.u, ivec_scale(RatFunc(lambda), a.v)};
}

}  // namespace infinireg
