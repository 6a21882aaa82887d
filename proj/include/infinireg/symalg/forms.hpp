#pragma once

#include <map>
#include <optional>
#include <utility>

#include "infinireg/symalg/truncsym.hpp"

namespace infinireg {

/// Relative 1-form sum_i c_i dt_i over the base, with coefficients kept to
/// t-degree <= 2 so that every piece has total degree <= 3.
class RelOneForm {
 public:
  static constexpr unsigned kMaxCoeffDegree = TruncSymElement::kMaxDegree - 1;

  RelOneForm() = default;
  explicit RelOneForm(int m) : comps_(static_cast<std::size_t>(m)) {}
  explicit RelOneForm(std::vector<TruncSymElement> comps);

  // c * dt_i.
  static RelOneForm basis(int m, int i, const TruncSymElement& c);

  int m() const { return static_cast<int>(comps_.size()); }
  const std::vector<TruncSymElement>& comps() const { return comps_; }
  const TruncSymElement& comp(int i) const { return comps_.at(static_cast<std::size_t>(i)); }
  bool is_zero() const;
  // Coefficients of t-degree exactly d (total degree d + 1).
  RelOneForm coeff_part(unsigned d) const;

  RelOneForm operator-() const;
  RelOneForm& operator+=(const RelOneForm& o);
  RelOneForm& operator-=(const RelOneForm& o);
  friend RelOneForm operator+(RelOneForm a, const RelOneForm& b) { return a += b; }
  friend RelOneForm operator-(RelOneForm a, const RelOneForm& b) { return a -= b; }
  RelOneForm times(const TruncSymElement& c) const;
  RelOneForm map_coeffs(const std::function<TruncSymElement(const TruncSymElement&)>& fn) const;

  std::string to_string(const RingSpec& spec) const;

  friend bool operator==(const RelOneForm&, const RelOneForm&) = default;

 private:
  void truncate();

  std::vector<TruncSymElement> comps_;
};

// Differential relative to tau_D(base), computed by eliminating dx_j through
// dx_j = -d(D(x_j)).
RelOneForm rel_d(const TruncSymElement& a, const Splitting& d);
// The same differential obtained by conjugating the untwisted one with the
// shift automorphism.
RelOneForm rel_d_transport(const TruncSymElement& a, const Splitting& d);

// g with rel_d(g, D) = w and no base component, via g_k = (1/k) sum_i t_i w_i
// on each homogeneous piece (after untwisting). Throws NOT_EXACT.
TruncSymElement euler_antiderivative(const RelOneForm& w, const Splitting& d);
TruncSymElement euler_antiderivative(const RelOneForm& w);

// log°(a) d log(b) - log°(b) d log(a) relative to tau_D.
RelOneForm log_wedge_dlog(const TruncSymElement& a, const TruncSymElement& b, const Splitting& d);

/// Absolute 1-form on A in normal form:
///   sum_j a_j dx_j + sum_i c_i dt_i + sum_{i<k} m_ik t_k dt_i
/// with a_j in A and c_i, m_ik in the base. The relations t_i dt_i = 0 and
/// t_i dt_k = -t_k dt_i come from I^2 = 0.
class AbsOneForm {
 public:
  AbsOneForm() = default;
  AbsOneForm(int n, int m);

  int n() const { return static_cast<int>(dx_.size()); }
  int m() const { return static_cast<int>(dt_.size()); }
  const SqZeroElement& dx(int j) const { return dx_.at(static_cast<std::size_t>(j)); }
  const RatFunc& dt(int i) const { return dt_.at(static_cast<std::size_t>(i)); }
  const std::map<std::pair<int, int>, RatFunc>& mixed() const { return mixed_; }

  void add_dx(int j, const SqZeroElement& c);
  void add_dt(int i, const RatFunc& c);
  // Adds c * t_k dt_i, reduced to normal form.
  void add_t_dt(int k, int i, const RatFunc& c);

  bool is_zero() const;
  // The part with base coefficients on the dx_j vanishes.
  bool is_infinitesimal() const;

  AbsOneForm operator-() const;
  AbsOneForm& operator+=(const AbsOneForm& o);
  AbsOneForm& operator-=(const AbsOneForm& o);
  friend AbsOneForm operator+(AbsOneForm a, const AbsOneForm& b) { return a += b; }
  friend AbsOneForm operator-(AbsOneForm a, const AbsOneForm& b) { return a -= b; }
  AbsOneForm times(const SqZeroElement& a) const;
  AbsOneForm scaled(const Rational& c) const;

  std::string to_string(const RingSpec& spec) const;

  friend bool operator==(const AbsOneForm&, const AbsOneForm&) = default;

 private:
  std::vector<SqZeroElement> dx_;
  std::vector<RatFunc> dt_;
  std::map<std::pair<int, int>, RatFunc> mixed_;
};

AbsOneForm abs_d(const SqZeroElement& a, int n);

// Searches g in A with abs_d(g) = w. The infinitesimal part of g is decided
// exactly; a base part is sought as N/L with L the lcm of the denominators
// on the dx_j and deg N <= cap. nullopt means not exact up to the cap.
std::optional<SqZeroElement> exactness_test(const AbsOneForm& w, unsigned cap);

Poly lcm(const Poly& a, const Poly& b);

}  // namespace infinireg
