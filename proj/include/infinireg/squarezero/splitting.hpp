#pragma once

#include "infinireg/squarezero/sqzero.hpp"

namespace infinireg {

/// A section tau_D(r) = r + D(r) of A -> Q(x), given by the derivation D
/// through its values on the generators.
class Splitting {
 public:
  Splitting() = default;
  Splitting(int n, int m);
  explicit Splitting(std::vector<IVec> images);

  static Splitting zero(const RingSpec& spec) { return Splitting(spec.n, spec.m); }

  int n() const { return static_cast<int>(images_.size()); }
  int m() const { return images_.empty() ? 0 : static_cast<int>(images_[0].size()); }
  const std::vector<IVec>& images() const { return images_; }
  const IVec& image(int j) const { return images_.at(static_cast<std::size_t>(j)); }
  bool is_zero() const;

  // D(r) = sum_j d_j r * D(x_j).
  IVec derive(const RatFunc& r) const;
  std::string to_string(const RingSpec& spec) const;

  friend bool operator==(const Splitting&, const Splitting&) = default;

 private:
  std::vector<IVec> images_;
};

SqZeroElement apply_splitting(const Splitting& d, const RatFunc& r);

// The automorphism (u, v) -> (u, v - D(u)) of A, carrying tau_D to tau_0.
SqZeroElement to_split_coords(const Splitting& d, const SqZeroElement& a);
SqZeroElement from_split_coords(const Splitting& d, const SqZeroElement& a);

}  // namespace infinireg
