#include "infinireg/cli/generators.hpp"

namespace infinireg {

namespace {

RatFunc maybe_zero(Rng& rng, int n, const SizeBounds& size) {
  return rng.integer(0, 3) == 0 ? RatFunc() : rng.ratfunc(n, size.degree, size.height);
}

IVec random_ivec(Rng& rng, const RingSpec& spec, const SizeBounds& size) {
  IVec v = ivec_zero(spec.m);
  for (auto& c : v) c = maybe_zero(rng, spec.n, size);
  return v;
}

IVec nonzero_ivec(Rng& rng, const RingSpec& spec, const SizeBounds& size) {
  return rng.draw<IVec>([&] { return random_ivec(rng, spec, size); },
                        [](const IVec& v) { return !ivec_is_zero(v); }, "nonzero infinitesimal");
}

}  // namespace

Splitting random_splitting(Rng& rng, const RingSpec& spec, const SizeBounds& size) {
  std::vector<IVec> images;
  for (int j = 0; j < spec.n; ++j) images.push_back(random_ivec(rng, spec, size));
  return Splitting(std::move(images));
}

SqZeroElement random_flat_element(Rng& rng, const RingSpec& spec, const SizeBounds& size) {
  return {rng.flat_ratfunc(spec.n, size.degree, size.height), random_ivec(rng, spec, size)};
}

InfBlochSum random_inf_bloch(Rng& rng, const RingSpec& spec, int terms, const SizeBounds& size) {
  InfBlochSum s;
  for (int k = 0; k < terms; ++k) {
    s.add(rng.flat_ratfunc(spec.n, size.degree, size.height), nonzero_ivec(rng, spec, size),
          rng.nonzero_rational(size.height));
  }
  return s;
}

TruncSymElement random_trunc(Rng& rng, const RingSpec& spec, unsigned min_degree, int terms,
                             const SizeBounds& size) {
  TruncSymElement e;
  for (int k = 0; k < terms; ++k) {
    std::vector<unsigned> exps(static_cast<std::size_t>(spec.m), 0);
    const auto d = static_cast<unsigned>(rng.integer(min_degree, TruncSymElement::kMaxDegree));
    for (unsigned s = 0; s < d; ++s) ++exps[static_cast<std::size_t>(rng.integer(0, spec.m - 1))];
    const RatFunc c = d < 2 ? rng.ratfunc(spec.n, size.degree, size.height + 1)
                            : RatFunc(rng.poly(spec.n, size.degree, size.height + 1));
    e += TruncSymElement::monomial(Monomial::from_exponents(exps), c);
  }
  return e;
}

TruncSymElement random_homogeneous(Rng& rng, const RingSpec& spec, unsigned degree, int terms,
                                   const SizeBounds& size) {
  TruncSymElement e;
  for (int k = 0; k < terms; ++k) {
    std::vector<unsigned> exps(static_cast<std::size_t>(spec.m), 0);
    for (unsigned s = 0; s < degree; ++s) ++exps[static_cast<std::size_t>(rng.integer(0, spec.m - 1))];
    e += TruncSymElement::monomial(Monomial::from_exponents(exps), rng.ratfunc(spec.n, size.degree, size.height));
  }
  return e;
}

AlgebraHom random_hom(Rng& rng, const RingSpec& source, const RingSpec& target, const SizeBounds& size) {
  AlgebraHom f;
  f.source = source;
  f.target = target;
  for (int j = 0; j < source.n; ++j) {
    // p_j = c x_j' + d, with j' cycling through the target variables.
    const RatFunc var = RatFunc::variable(j % target.n);
    f.px.push_back(var.scaled(rng.nonzero_rational(size.height)) + RatFunc(rng.rational(size.height)));
    f.phix.push_back(random_ivec(rng, target, size));
  }
  for (int i = 0; i < source.m; ++i) f.psit.push_back(random_ivec(rng, target, size));
  f.validate();
  return f;
}

LiftCorrections random_corrections(Rng& rng, const AlgebraHom& f, const SizeBounds& size) {
  // Polynomial coefficients keep the lifted log series small.
  auto one = [&] {
    TruncSymElement e;
    for (unsigned degree = 2; degree <= TruncSymElement::kMaxDegree; ++degree) {
      std::vector<unsigned> exps(static_cast<std::size_t>(f.target.m), 0);
      for (unsigned s = 0; s < degree; ++s) ++exps[static_cast<std::size_t>(rng.integer(0, f.target.m - 1))];
      e += TruncSymElement::monomial(Monomial::from_exponents(exps), RatFunc(rng.poly(f.target.n, size.degree, size.height)));
    }
    return e;
  };
  LiftCorrections c;
  for (int j = 0; j < f.source.n; ++j) c.x.push_back(one());
  for (int i = 0; i < f.source.m; ++i) c.t.push_back(one());
  return c;
}

}  // namespace infinireg
