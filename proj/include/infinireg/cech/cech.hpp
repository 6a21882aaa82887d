#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "infinireg/bloch/bloch.hpp"
#include "infinireg/squarezero/splitting.hpp"
#include "infinireg/symalg/forms.hpp"
#include "infinireg/symalg/truncsym.hpp"

namespace infinireg {

/// Opens U_1..U_r of one localized ring, differing only in their splittings.
/// Indices are 0-based here.
struct CoverSetup {
  RingSpec spec;
  std::vector<Splitting> splittings;

  int size() const { return static_cast<int>(splittings.size()); }
  // PRECONDITION unless r >= 2 and every splitting matches the ring.
  void validate() const;
};

enum class CechMode { Consistent, Raw };

using OpenPair = std::pair<int, int>;

/// Cocycle data (a_ij, b_i). CONSISTENT data comes from sections c_i with
/// a_ij = c_j - c_i and b_i = delta_inf(c_i); RAW data is taken as given,
/// with a_ij stored for i < j and a_ji = -a_ij.
class CechDatum {
 public:
  static CechDatum consistent(std::vector<InfBlochSum> sections);
  static CechDatum raw(std::map<OpenPair, InfBlochSum> a, std::vector<FWedgeSum> b);

  CechMode mode() const { return mode_; }
  int size() const { return static_cast<int>(b_.size()); }
  const std::vector<InfBlochSum>& sections() const { return sections_; }
  InfBlochSum a(int i, int j) const;
  const FWedgeSum& b(int i) const { return b_.at(static_cast<std::size_t>(i)); }
  // Replaces b_i; the datum becomes RAW.
  void perturb_b(int i, const FWedgeSum& delta);

 private:
  CechMode mode_ = CechMode::Consistent;
  std::vector<InfBlochSum> sections_;
  std::map<OpenPair, InfBlochSum> a_;
  std::vector<FWedgeSum> b_;
};

/// gamma_ij for i < j; gamma_ji = -gamma_ij and gamma_ii = 0.
class GammaCocycle {
 public:
  explicit GammaCocycle(int r) : r_(r) {}

  int size() const { return r_; }
  Sym3Class at(int i, int j) const;
  void set(int i, int j, Sym3Class value);
  const std::map<OpenPair, Sym3Class>& values() const { return values_; }

 private:
  int r_;
  std::map<OpenPair, Sym3Class> values_;
};

// gamma_ij = li2_first(a_ij, D_i) + h_id(D_i, D_j)(b_j).
GammaCocycle assemble_gamma(const CoverSetup& cover, const CechDatum& data);

// gamma_jk - gamma_ik + gamma_ij = 0 for all i < j < k.
bool verify_cocycle(const GammaCocycle& g);
// Triples (i, j, k) where the identity fails.
std::vector<std::tuple<int, int, int>> cocycle_failures(const GammaCocycle& g);

struct SplittingChange {
  std::map<OpenPair, Sym3Class> difference;  // gamma'_ij - gamma_ij
  std::vector<Sym3Class> witness;             // h_id(D_i, D'_i)(b_i)
  bool is_coboundary = false;
};

// PRECONDITION for RAW data or covers of different size.
SplittingChange splitting_change_delta(const CoverSetup& cover, const CoverSetup& changed,
                                       const CechDatum& data);

// gamma of (a_j - a_i, delta_inf(a_i)) equals li2(a_j, D_j) - li2(a_i, D_i).
bool boundary_to_boundary(const CoverSetup& cover, const std::vector<InfBlochSum>& a);

struct Rho1Report {
  unsigned cap = 0;
  std::vector<AbsOneForm> sections;                // logdlog(b_i)
  std::map<OpenPair, std::optional<SqZeroElement>> primitives;  // of section_j - section_i
  std::vector<OpenPair> flagged;                   // pairs not exact up to the cap

  bool ok() const { return flagged.empty(); }
};

// Accepts RAW data too, so corrupted sections can be reported.
Rho1Report rho1_sections(const CoverSetup& cover, const CechDatum& data, unsigned cap);

}  // namespace infinireg
