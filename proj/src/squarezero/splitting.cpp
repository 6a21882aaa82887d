#include "infinireg/squarezero/splitting.hpp"

namespace infinireg {

Splitting::Splitting(int n, int m)
    : images_(static_cast<std::size_t>(n), ivec_zero(m)) {}

Splitting::Splitting(std::vector<IVec> images) : images_(std::move(images)) {
  for (const auto& v : images_) {
    if (v.size() != images_.front().size()) {
      throw Error(ErrorCode::Precondition, "splitting images have different ranks");
    }
  }
}

bool Splitting::is_zero() const {
  for (const auto& v : images_) {
    if (!ivec_is_zero(v)) return false;
  }
  return true;
}

IVec Splitting::derive(const RatFunc& r) const {
  IVec out = ivec_zero(m());
  if (r.is_constant()) return out;
  for (int j = 0; j < n(); ++j) {
    if (ivec_is_zero(image(j))) continue;
    const RatFunc dr = r.derivative(j);
    if (dr.is_zero()) continue;
    out = ivec_add(out, ivec_scale(dr, image(j)));
  }
  return out;
}

std::string Splitting::to_string(const RingSpec& spec) const {
  std::string out = "{ ";
  for (int j = 0; j < n(); ++j) {
    out += spec.xname(j) + " -> " + ivec_to_string(image(j), spec) + "; ";
  }
  return out + "}";
}

SqZeroElement apply_splitting(const Splitting& d, const RatFunc& r) { return {r, d.derive(r)}; }

SqZeroElement to_split_coords(const Splitting& d, const SqZeroElement& a) {
  return {a.u, ivec_sub(a.v, d.derive(a.u))};
}

SqZeroElement from_split_coords(const Splitting& d, const SqZeroElement& a) {
  return {a.u, ivec_add(a.v, d.derive(a.u))};
}

}  // namespace infinireg
