#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "infinireg/algebra/gcd_free_basis.hpp"
#include "infinireg/squarezero/sqzero.hpp"
#include "infinireg/symalg/forms.hpp"

namespace infinireg {

/// Rational combination of generators [a] with a and 1 - a units.
class BlochSum {
 public:
  using TermMap = std::map<SqZeroElement, Rational>;

  BlochSum() = default;
  // Throws FLATNESS_VIOLATION unless a is flat.
  static BlochSum generator(const SqZeroElement& a, const Rational& c = 1);

  void add(const SqZeroElement& a, const Rational& c);
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BlochSum operator-() const { return scaled(-1); }
  BlochSum& operator+=(const BlochSum& o);
  BlochSum& operator-=(const BlochSum& o) { return *this += -o; }
  friend BlochSum operator+(BlochSum a, const BlochSum& b) { return a += b; }
  friend BlochSum operator-(BlochSum a, const BlochSum& b) { return a -= b; }
  BlochSum scaled(const Rational& c) const;

  std::string to_string(const RingSpec& spec) const;

  friend bool operator==(const BlochSum&, const BlochSum&) = default;

 private:
  TermMap terms_;
};

/// Rational combination of differences [u + alpha] - [u] against the zero
/// splitting; u is a base unit other than 1 and alpha lies in I.
class InfBlochSum {
 public:
  using Key = std::pair<RatFunc, IVec>;
  using TermMap = std::map<Key, Rational>;

  InfBlochSum() = default;
  static InfBlochSum generator(const RatFunc& u, const IVec& alpha, const Rational& c = 1);

  // Terms with alpha = 0 are dropped. Throws FLATNESS_VIOLATION for u in {0, 1}.
  void add(const RatFunc& u, const IVec& alpha, const Rational& c);
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  InfBlochSum operator-() const { return scaled(-1); }
  InfBlochSum& operator+=(const InfBlochSum& o);
  InfBlochSum& operator-=(const InfBlochSum& o) { return *this += -o; }
  friend InfBlochSum operator+(InfBlochSum a, const InfBlochSum& b) { return a += b; }
  friend InfBlochSum operator-(InfBlochSum a, const InfBlochSum& b) { return a -= b; }
  InfBlochSum scaled(const Rational& c) const;

  // The same element written as a BlochSum of the two generators per term.
  BlochSum expand() const;

  std::string to_string(const RingSpec& spec) const;

  friend bool operator==(const InfBlochSum&, const InfBlochSum&) = default;

 private:
  TermMap terms_;
};

enum class WedgeKind { G1, G2, Base };

/// G1(alpha, beta) = (1 + alpha) ^ (1 + beta), G2(alpha, u) = (1 + alpha) ^ u,
/// Base(u, w) = u ^ w with u, w base units.
struct WedgeTerm {
  WedgeKind kind = WedgeKind::G1;
  IVec alpha;
  IVec beta;
  RatFunc left;
  RatFunc right;

  static WedgeTerm g1(const IVec& alpha, const IVec& beta) { return {WedgeKind::G1, alpha, beta, {}, {}}; }
  static WedgeTerm g2(const IVec& alpha, const RatFunc& u) { return {WedgeKind::G2, alpha, {}, {}, u}; }
  static WedgeTerm base(const RatFunc& u, const RatFunc& w) { return {WedgeKind::Base, {}, {}, u, w}; }

  // True when the term is trivially zero (alpha or beta zero, a unit equal to 1).
  bool is_trivial() const;
  std::string to_string(const RingSpec& spec) const;

  friend bool operator==(const WedgeTerm&, const WedgeTerm&) = default;
  friend auto operator<=>(const WedgeTerm&, const WedgeTerm&) = default;
};

class FWedgeSum {
 public:
  using TermMap = std::map<WedgeTerm, Rational>;

  FWedgeSum() = default;
  static FWedgeSum single(const WedgeTerm& t, const Rational& c = 1);

  void add(const WedgeTerm& t, const Rational& c);
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::vector<UnitWedge> base_part() const;
  // The Base terms vanish in the exterior square of base units tensor Q.
  bool base_part_vanishes() const;
  FWedgeSum without_base() const;

  FWedgeSum operator-() const { return scaled(-1); }
  FWedgeSum& operator+=(const FWedgeSum& o);
  FWedgeSum& operator-=(const FWedgeSum& o) { return *this += -o; }
  friend FWedgeSum operator+(FWedgeSum a, const FWedgeSum& b) { return a += b; }
  friend FWedgeSum operator-(FWedgeSum a, const FWedgeSum& b) { return a -= b; }
  FWedgeSum scaled(const Rational& c) const;

  std::string to_string(const RingSpec& spec) const;

  friend bool operator==(const FWedgeSum&, const FWedgeSum&) = default;

 private:
  TermMap terms_;
};

FWedgeSum delta(const BlochSum& s);
FWedgeSum delta_inf(const InfBlochSum& s);

// [x] - [y] + [y/x] - [(1 - 1/x)/(1 - 1/y)] + [(1 - x)/(1 - y)]; throws
// FLATNESS_VIOLATION naming the first argument that is not flat.
BlochSum five_term_sum(const SqZeroElement& x, const SqZeroElement& y);

// Throws NOT_INFINITESIMAL unless the Base part vanishes.
AbsOneForm logdlog(const FWedgeSum& w, const RingSpec& spec);

}  // namespace infinireg
