#include "infinireg/cech/cech.hpp"

#include "infinireg/homotopy/homotopy.hpp"
#include "infinireg/regulator/regulator.hpp"

namespace infinireg {

namespace {

void require_index(int i, int r) {
  if (i < 0 || i >= r) throw Error(ErrorCode::Precondition, "open index " + std::to_string(i + 1) + " out of range");
}

Sym3Class h_identity(const CoverSetup& cover, const Splitting& from, const Splitting& to, const FWedgeSum& b) {
  return homotopy_h(AlgebraHom::identity(cover.spec), from, to, b);
}

}  // namespace

void CoverSetup::validate() const {
  if (size() < 2) throw Error(ErrorCode::Precondition, "a cover needs at least two opens");
  for (const auto& d : splittings) {
    if (d.n() != spec.n || d.m() != spec.m) {
      throw Error(ErrorCode::Precondition, "splitting does not match the ring");
    }
  }
}

CechDatum CechDatum::consistent(std::vector<InfBlochSum> sections) {
  CechDatum out;
  out.mode_ = CechMode::Consistent;
  for (const auto& c : sections) out.b_.push_back(delta_inf(c));
  out.sections_ = std::move(sections);
  return out;
}

CechDatum CechDatum::raw(std::map<OpenPair, InfBlochSum> a, std::vector<FWedgeSum> b) {
  CechDatum out;
  out.mode_ = CechMode::Raw;
  for (const auto& [key, value] : a) {
    const auto [i, j] = key;
    require_index(i, static_cast<int>(b.size()));
    require_index(j, static_cast<int>(b.size()));
    if (i == j) throw Error(ErrorCode::Precondition, "a_ii must be zero");
    if (i < j) {
      out.a_[{i, j}] += value;
    } else {
      out.a_[{j, i}] -= value;
    }
  }
  out.b_ = std::move(b);
  return out;
}

InfBlochSum CechDatum::a(int i, int j) const {
  require_index(i, size());
  require_index(j, size());
  if (mode_ == CechMode::Consistent) return sections_[static_cast<std::size_t>(j)] - sections_[static_cast<std::size_t>(i)];
  if (i == j) return {};
  const auto it = a_.find({std::min(i, j), std::max(i, j)});
  if (it == a_.end()) return {};
  return i < j ? it->second : -it->second;
}

void CechDatum::perturb_b(int i, const FWedgeSum& delta) {
  require_index(i, size());
  if (mode_ == CechMode::Consistent) {
    for (int p = 0; p < size(); ++p) {
      for (int q = p + 1; q < size(); ++q) a_[{p, q}] = a(p, q);
    }
    mode_ = CechMode::Raw;
  }
  b_[static_cast<std::size_t>(i)] += delta;
}

Sym3Class GammaCocycle::at(int i, int j) const {
  require_index(i, r_);
  require_index(j, r_);
  if (i == j) return {};
  const auto it = values_.find({std::min(i, j), std::max(i, j)});
  if (it == values_.end()) return {};
  return i < j ? it->second : -it->second;
}

void GammaCocycle::set(int i, int j, Sym3Class value) {
  require_index(i, r_);
  require_index(j, r_);
  if (i == j) throw Error(ErrorCode::Precondition, "gamma_ii is zero");
  if (i < j) {
    values_[{i, j}] = std::move(value);
  } else {
    values_[{j, i}] = -value;
  }
}

GammaCocycle assemble_gamma(const CoverSetup& cover, const CechDatum& data) {
  cover.validate();
  if (data.size() != cover.size()) throw Error(ErrorCode::Precondition, "datum and cover differ in size");
  GammaCocycle g(cover.size());
  for (int i = 0; i < cover.size(); ++i) {
    const Splitting& di = cover.splittings[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < cover.size(); ++j) {
      const Splitting& dj = cover.splittings[static_cast<std::size_t>(j)];
      g.set(i, j, li2_first(data.a(i, j), di) + h_identity(cover, di, dj, data.b(j)));
    }
  }
  return g;
}

std::vector<std::tuple<int, int, int>> cocycle_failures(const GammaCocycle& g) {
  std::vector<std::tuple<int, int, int>> out;
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      for (int k = j + 1; k < g.size(); ++k) {
        if (!(g.at(j, k) - g.at(i, k) + g.at(i, j)).is_zero()) out.emplace_back(i, j, k);
      }
    }
  }
  return out;
}

bool verify_cocycle(const GammaCocycle& g) { return cocycle_failures(g).empty(); }

SplittingChange splitting_change_delta(const CoverSetup& cover, const CoverSetup& changed,
                                       const CechDatum& data) {
  if (data.mode() != CechMode::Consistent) {
    throw Error(ErrorCode::Precondition, "splitting change needs CONSISTENT data");
  }
  if (changed.size() != cover.size()) throw Error(ErrorCode::Precondition, "covers differ in size");
  const GammaCocycle before = assemble_gamma(cover, data);
  const GammaCocycle after = assemble_gamma(changed, data);
  SplittingChange out;
  for (int i = 0; i < cover.size(); ++i) {
    const auto iu = static_cast<std::size_t>(i);
    out.witness.push_back(h_identity(cover, cover.splittings[iu], changed.splittings[iu], data.b(i)));
  }
  out.is_coboundary = true;
  for (int i = 0; i < cover.size(); ++i) {
    for (int j = i + 1; j < cover.size(); ++j) {
      const Sym3Class diff = after.at(i, j) - before.at(i, j);
      const Sym3Class expected = out.witness[static_cast<std::size_t>(j)] - out.witness[static_cast<std::size_t>(i)];
      out.is_coboundary = out.is_coboundary && diff == expected;
      out.difference[{i, j}] = diff;
    }
  }
  return out;
}

bool boundary_to_boundary(const CoverSetup& cover, const std::vector<InfBlochSum>& a) {
  const GammaCocycle g = assemble_gamma(cover, CechDatum::consistent(a));
  std::vector<Sym3Class> local;
  for (int i = 0; i < cover.size(); ++i) {
    const auto iu = static_cast<std::size_t>(i);
    local.push_back(li2_first(a.at(iu), cover.splittings[iu]));
  }
  for (int i = 0; i < cover.size(); ++i) {
    for (int j = i + 1; j < cover.size(); ++j) {
      if (g.at(i, j) != local[static_cast<std::size_t>(j)] - local[static_cast<std::size_t>(i)]) return false;
    }
  }
  return true;
}

Rho1Report rho1_sections(const CoverSetup& cover, const CechDatum& data, unsigned cap) {
  cover.validate();
  if (data.size() != cover.size()) throw Error(ErrorCode::Precondition, "datum and cover differ in size");
  Rho1Report report;
  report.cap = cap;
  for (int i = 0; i < cover.size(); ++i) report.sections.push_back(logdlog(data.b(i), cover.spec));
  for (int i = 0; i < cover.size(); ++i) {
    for (int j = i + 1; j < cover.size(); ++j) {
      const AbsOneForm diff = report.sections[static_cast<std::size_t>(j)] - report.sections[static_cast<std::size_t>(i)];
      auto primitive = exactness_test(diff, cap);
      if (!primitive) report.flagged.emplace_back(i, j);
      report.primitives[{i, j}] = std::move(primitive);
    }
  }
  return report;
}

}  // namespace infinireg
