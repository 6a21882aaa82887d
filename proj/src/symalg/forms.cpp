#include "infinireg/symalg/forms.hpp"

#include <set>

#include "infinireg/algebra/linsolve.hpp"

namespace infinireg {

RelOneForm::RelOneForm(std::vector<TruncSymElement> comps) : comps_(std::move(comps)) { truncate(); }

RelOneForm RelOneForm::basis(int m, int i, const TruncSymElement& c) {
  RelOneForm w(m);
  w.comps_.at(static_cast<std::size_t>(i)) = c;
  w.truncate();
  return w;
}

void RelOneForm::truncate() {
  for (auto& c : comps_) {
    if (c.is_zero()) continue;
    TruncSymElement kept;
    for (unsigned d = 0; d <= kMaxCoeffDegree; ++d) kept += c.part(d);
    c = std::move(kept);
  }
}

bool RelOneForm::is_zero() const {
  for (const auto& c : comps_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

RelOneForm RelOneForm::coeff_part(unsigned d) const {
  RelOneForm out(m());
  for (std::size_t i = 0; i < comps_.size(); ++i) out.comps_[i] = comps_[i].part(d);
  return out;
}

RelOneForm RelOneForm::operator-() const {
  RelOneForm out = *this;
  for (auto& c : out.comps_) c = -c;
  return out;
}

RelOneForm& RelOneForm::operator+=(const RelOneForm& o) {
  if (comps_.size() < o.comps_.size()) comps_.resize(o.comps_.size());
  for (std::size_t i = 0; i < o.comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

RelOneForm& RelOneForm::operator-=(const RelOneForm& o) {
  if (comps_.size() < o.comps_.size()) comps_.resize(o.comps_.size());
  for (std::size_t i = 0; i < o.comps_.size(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

RelOneForm RelOneForm::times(const TruncSymElement& c) const {
  RelOneForm out = *this;
  for (auto& comp : out.comps_) comp = comp * c;
  out.truncate();
  return out;
}

RelOneForm RelOneForm::map_coeffs(
    const std::function<TruncSymElement(const TruncSymElement&)>& fn) const {
  RelOneForm out = *this;
  for (auto& comp : out.comps_) comp = fn(comp);
  out.truncate();
  return out;
}

std::string RelOneForm::to_string(const RingSpec& spec) const {
  std::string out;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "[" + comps_[i].to_string(spec) + "]*d" + var_name(spec.tnames, static_cast<int>(i));
  }
  return out.empty() ? "0" : out;
}

namespace {

RelOneForm untwisted_d(const TruncSymElement& a, int m) {
  std::vector<TruncSymElement> comps;
  for (int i = 0; i < m; ++i) comps.push_back(a.partial_t(i));
  return RelOneForm(std::move(comps));
}

}  // namespace

RelOneForm rel_d(const TruncSymElement& a, const Splitting& d) {
  const int m = d.m();
  RelOneForm out = untwisted_d(a, m);
  if (d.is_zero()) return out;
  const int n = d.n();
  // dx_j as a relative form: dx_j = -sum_k (D_jk dt_k + t_k sum_l d_l D_jk dx_l).
  std::vector<RelOneForm> dx(static_cast<std::size_t>(n), RelOneForm(m));
  for (unsigned round = 0; round < TruncSymElement::kMaxDegree; ++round) {
    std::vector<RelOneForm> next(static_cast<std::size_t>(n), RelOneForm(m));
    for (int j = 0; j < n; ++j) {
      const IVec& dj = d.image(j);
      RelOneForm& e = next[static_cast<std::size_t>(j)];
      for (int k = 0; k < m; ++k) {
        const RatFunc& c = dj[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        e -= RelOneForm::basis(m, k, TruncSymElement(c));
        const TruncSymElement tk = TruncSymElement::generator(k);
        for (int l = 0; l < n; ++l) {
          const RatFunc dc = c.derivative(l);
          if (dc.is_zero()) continue;
          e -= dx[static_cast<std::size_t>(l)].times(tk.scaled(dc));
        }
      }
    }
    dx = std::move(next);
  }
  for (int l = 0; l < n; ++l) {
    const TruncSymElement da = a.partial_x(l);
    if (da.is_zero()) continue;
    out += dx[static_cast<std::size_t>(l)].times(da);
  }
  return out;
}

RelOneForm rel_d_transport(const TruncSymElement& a, const Splitting& d) {
  if (d.is_zero()) return untwisted_d(a, d.m());
  const TruncHom fwd = TruncHom::shift(d);
  const TruncHom back = TruncHom::shift_inverse(d);
  const RelOneForm w0 = untwisted_d(back.apply(a), d.m());
  return w0.map_coeffs([&](const TruncSymElement& c) { return fwd.apply(c); });
}

TruncSymElement euler_antiderivative(const RelOneForm& w) {
  TruncSymElement g;
  for (unsigned k = 1; k <= TruncSymElement::kMaxDegree; ++k) {
    TruncSymElement gk;
    for (int i = 0; i < w.m(); ++i) {
      const TruncSymElement piece = w.comp(i).part(k - 1);
      if (!piece.is_zero()) gk += piece * TruncSymElement::generator(i);
    }
    g += gk.scaled(RatFunc(Rational(1, static_cast<long>(k))));
  }
  if (untwisted_d(g, w.m()) != w) {
    throw Error(ErrorCode::NotExact, "relative 1-form is not closed");
  }
  return g;
}

TruncSymElement euler_antiderivative(const RelOneForm& w, const Splitting& d) {
  if (d.is_zero()) return euler_antiderivative(w);
  const TruncHom fwd = TruncHom::shift(d);
  const TruncHom back = TruncHom::shift_inverse(d);
  const RelOneForm w0 = w.map_coeffs([&](const TruncSymElement& c) { return back.apply(c); });
  return fwd.apply(euler_antiderivative(w0));
}

RelOneForm log_wedge_dlog(const TruncSymElement& a, const TruncSymElement& b, const Splitting& d) {
  const RelOneForm dlog_a = rel_d(a, d).times(a.inverse());
  const RelOneForm dlog_b = rel_d(b, d).times(b.inverse());
  return dlog_b.times(trunc_log_circ(a, d)) - dlog_a.times(trunc_log_circ(b, d));
}

AbsOneForm::AbsOneForm(int n, int m)
    : dx_(static_cast<std::size_t>(n), SqZeroElement::base(RatFunc(), m)),
      dt_(static_cast<std::size_t>(m)) {}

void AbsOneForm::add_dx(int j, const SqZeroElement& c) {
  auto& slot = dx_.at(static_cast<std::size_t>(j));
  slot = slot + c;
}

void AbsOneForm::add_dt(int i, const RatFunc& c) { dt_.at(static_cast<std::size_t>(i)) += c; }

void AbsOneForm::add_t_dt(int k, int i, const RatFunc& c) {
  if (k == i || c.is_zero()) return;
  const auto key = i < k ? std::make_pair(i, k) : std::make_pair(k, i);
  const RatFunc signed_c = i < k ? c : -c;
  auto [it, inserted] = mixed_.try_emplace(key, signed_c);
  if (inserted) return;
  it->second += signed_c;
  if (it->second.is_zero()) mixed_.erase(it);
}

bool AbsOneForm::is_zero() const {
  for (const auto& c : dx_) {
    if (!c.is_zero()) return false;
  }
  for (const auto& c : dt_) {
    if (!c.is_zero()) return false;
  }
  return mixed_.empty();
}

bool AbsOneForm::is_infinitesimal() const {
  for (const auto& c : dx_) {
    if (!c.u.is_zero()) return false;
  }
  return true;
}

AbsOneForm AbsOneForm::operator-() const { return scaled(Rational(-1)); }

AbsOneForm& AbsOneForm::operator+=(const AbsOneForm& o) {
  if (o.dx_.size() != dx_.size() || o.dt_.size() != dt_.size()) {
    throw Error(ErrorCode::Precondition, "forms over different rings");
  }
  for (std::size_t j = 0; j < dx_.size(); ++j) dx_[j] = dx_[j] + o.dx_[j];
  for (std::size_t i = 0; i < dt_.size(); ++i) dt_[i] += o.dt_[i];
  for (const auto& [key, c] : o.mixed_) add_t_dt(key.second, key.first, c);
  return *this;
}

AbsOneForm& AbsOneForm::operator-=(const AbsOneForm& o) { return *this += -o; }

AbsOneForm AbsOneForm::times(const SqZeroElement& a) const {
  AbsOneForm out(n(), m());
  for (std::size_t j = 0; j < dx_.size(); ++j) out.dx_[j] = sq_mul(a, dx_[j]);
  for (int i = 0; i < m(); ++i) {
    const RatFunc& c = dt_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    out.add_dt(i, a.u * c);
    for (int k = 0; k < m(); ++k) out.add_t_dt(k, i, a.v[static_cast<std::size_t>(k)] * c);
  }
  for (const auto& [key, c] : mixed_) out.add_t_dt(key.second, key.first, a.u * c);
  return out;
}

AbsOneForm AbsOneForm::scaled(const Rational& c) const {
  return times(SqZeroElement::base(RatFunc(c), m()));
}

std::string AbsOneForm::to_string(const RingSpec& spec) const {
  std::string out;
  auto term = [&](const RatFunc& c, const std::string& tail) {
    if (c.is_zero()) return;
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string(spec.xnames) + ")*" + tail;
  };
  for (int j = 0; j < n(); ++j) {
    const std::string dxj = "d" + var_name(spec.xnames, j);
    term(dx_[static_cast<std::size_t>(j)].u, dxj);
    for (int i = 0; i < m(); ++i) {
      term(dx_[static_cast<std::size_t>(j)].v[static_cast<std::size_t>(i)],
           var_name(spec.tnames, i) + "*" + dxj);
    }
  }
  for (int i = 0; i < m(); ++i) term(dt_[static_cast<std::size_t>(i)], "d" + var_name(spec.tnames, i));
  for (const auto& [key, c] : mixed_) {
    term(c, var_name(spec.tnames, key.second) + "*d" + var_name(spec.tnames, key.first));
  }
  return out.empty() ? "0" : out;
}

AbsOneForm abs_d(const SqZeroElement& a, int n) {
  const int m = static_cast<int>(a.v.size());
  AbsOneForm w(n, m);
  for (int j = 0; j < n; ++j) w.add_dx(j, SqZeroElement::base(a.u.derivative(j), m));
  for (int i = 0; i < m; ++i) {
    const RatFunc& vi = a.v[static_cast<std::size_t>(i)];
    if (vi.is_zero()) continue;
    w.add_dt(i, vi);
    for (int j = 0; j < n; ++j) {
      IVec e = ivec_zero(m);
      e[static_cast<std::size_t>(i)] = vi.derivative(j);
      w.add_dx(j, SqZeroElement::infinitesimal(e));
    }
  }
  return w;
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const Poly g = gcd(a, b);
  return (*(a * b).divide_exact(g)).monic();
}

namespace {

void monomials_up_to(int nvars, unsigned cap, std::vector<Monomial>& out) {
  std::vector<unsigned> exps(static_cast<std::size_t>(nvars), 0);
  std::function<void(int, unsigned)> rec = [&](int var, unsigned left) {
    if (var == nvars) {
      out.push_back(Monomial::from_exponents(exps));
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      exps[static_cast<std::size_t>(var)] = e;
      rec(var + 1, left - e);
    }
    exps[static_cast<std::size_t>(var)] = 0;
  };
  rec(0, cap);
}

std::optional<RatFunc> base_antiderivative(const std::vector<RatFunc>& grads, unsigned cap) {
  const int n = static_cast<int>(grads.size());
  Poly den(1);
  for (const auto& g : grads) den = lcm(den, g.den());
  std::vector<Monomial> unknowns;
  monomials_up_to(n, cap, unknowns);
  // d_j(N/L) = u_j  <=>  d_j N * L - N * d_j L = u_j * L^2.
  std::vector<std::vector<Poly>> cols(unknowns.size());
  std::vector<Poly> rhs;
  for (int j = 0; j < n; ++j) {
    const Poly dl = den.derivative(j);
    const RatFunc& g = grads[static_cast<std::size_t>(j)];
    rhs.push_back(g.num() * *(den * den).divide_exact(g.den()));
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      const Poly mono = Poly::monomial(unknowns[u]);
      cols[u].push_back(mono.derivative(j) * den - mono * dl);
    }
  }
  RationalMatrix mat;
  std::vector<Rational> b;
  for (int j = 0; j < n; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    std::set<Monomial> rows;
    for (const auto& t : rhs[ju].terms()) rows.insert(t.mono);
    for (const auto& col : cols) {
      for (const auto& t : col[ju].terms()) rows.insert(t.mono);
    }
    auto coeff_of = [](const Poly& p, Monomial mono) {
      for (const auto& t : p.terms()) {
        if (t.mono == mono) return t.coef;
      }
      return Rational(0);
    };
    for (Monomial row : rows) {
      std::vector<Rational> line;
      for (const auto& col : cols) line.push_back(coeff_of(col[ju], row));
      mat.push_back(std::move(line));
      b.push_back(coeff_of(rhs[ju], row));
    }
  }
  const auto sol = linear_solve_exact(mat, b);
  if (!sol) return std::nullopt;
  std::vector<Term> terms;
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    if ((*sol)[u] != 0) terms.push_back({unknowns[u], (*sol)[u]});
  }
  const RatFunc g(Poly::from_terms(std::move(terms)), den);
  for (int j = 0; j < n; ++j) {
    if (g.derivative(j) != grads[static_cast<std::size_t>(j)]) {
      throw Error(ErrorCode::Internal, "ansatz solution fails verification");
    }
  }
  return g;
}

}  // namespace

std::optional<SqZeroElement> exactness_test(const AbsOneForm& w, unsigned cap) {
  if (!w.mixed().empty()) return std::nullopt;
  IVec inf(static_cast<std::size_t>(w.m()));
  for (int i = 0; i < w.m(); ++i) inf[static_cast<std::size_t>(i)] = w.dt(i);
  std::vector<RatFunc> grads;
  bool has_base = false;
  for (int j = 0; j < w.n(); ++j) {
    for (int i = 0; i < w.m(); ++i) {
      if (w.dx(j).v[static_cast<std::size_t>(i)] != inf[static_cast<std::size_t>(i)].derivative(j)) {
        return std::nullopt;
      }
    }
    grads.push_back(w.dx(j).u);
    has_base = has_base || !w.dx(j).u.is_zero();
  }
  if (!has_base) return SqZeroElement{RatFunc(), inf};
  const auto base = base_antiderivative(grads, cap);
  if (!base) return std::nullopt;
  return SqZeroElement{*base, inf};
}

}  // namespace infinireg
