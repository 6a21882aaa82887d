#include "infinireg/squarezero/hom.hpp"

namespace infinireg {

AlgebraHom AlgebraHom::identity(const RingSpec& spec) {
  AlgebraHom f;
  f.source = spec;
  f.target = spec;
  for (int j = 0; j < spec.n; ++j) {
    f.px.push_back(RatFunc::variable(j));
    f.phix.push_back(ivec_zero(spec.m));
  }
  for (int i = 0; i < spec.m; ++i) {
    IVec e = ivec_zero(spec.m);
    e[static_cast<std::size_t>(i)] = RatFunc(1);
    f.psit.push_back(e);
  }
  return f;
}

void AlgebraHom::validate() const {
  const auto n1 = static_cast<std::size_t>(source.n);
  const auto m1 = static_cast<std::size_t>(source.m);
  const auto m2 = static_cast<std::size_t>(target.m);
  if (px.size() != n1 || phix.size() != n1 || psit.size() != m1) {
    throw Error(ErrorCode::Precondition, "homomorphism data does not match the source ring");
  }
  for (const auto& v : phix) {
    if (v.size() != m2) throw Error(ErrorCode::Precondition, "phi has wrong rank");
  }
  for (const auto& v : psit) {
    if (v.size() != m2) throw Error(ErrorCode::Precondition, "psi has wrong rank");
  }
}

RatFunc AlgebraHom::map_base(const RatFunc& u) const { return u.substitute(px); }

IVec AlgebraHom::base_shift(const RatFunc& u) const {
  IVec out = ivec_zero(target.m);
  if (u.is_constant()) return out;
  for (int j = 0; j < source.n; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    if (ivec_is_zero(phix[ju])) continue;
    const RatFunc du = u.derivative(j);
    if (du.is_zero()) continue;
    out = ivec_add(out, ivec_scale(map_base(du), phix[ju]));
  }
  return out;
}

IVec AlgebraHom::map_ivec(const IVec& v) const {
  IVec out = ivec_zero(target.m);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    out = ivec_add(out, ivec_scale(map_base(v[i]), psit.at(i)));
  }
  return out;
}

std::string AlgebraHom::to_string() const {
  std::string out = "{ ";
  for (int j = 0; j < source.n; ++j) {
    const SqZeroElement img{px[static_cast<std::size_t>(j)], phix[static_cast<std::size_t>(j)]};
    out += source.xname(j) + " -> " + img.to_string(target) + "; ";
  }
  for (int i = 0; i < source.m; ++i) {
    out += source.tname(i) + " -> " + ivec_to_string(psit[static_cast<std::size_t>(i)], target) + "; ";
  }
  return out + "}";
}

SqZeroElement apply_hom(const AlgebraHom& f, const SqZeroElement& a) {
  return {f.map_base(a.u), ivec_add(f.base_shift(a.u), f.map_ivec(a.v))};
}

AlgebraHom hom_in_split_coords(const AlgebraHom& f, const Splitting& d1, const Splitting& d2) {
  AlgebraHom g = f;
  for (int j = 0; j < f.source.n; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    const SqZeroElement img = apply_hom(f, {RatFunc::variable(j), d1.image(j)});
    g.phix[ju] = ivec_sub(img.v, d2.derive(img.u));
  }
  return g;
}

}  // namespace infinireg
