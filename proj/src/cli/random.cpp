#include "infinireg/cli/random.hpp"

#include <vector>

namespace infinireg {

long Rng::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Rational Rng::rational(long height) {
  Rational q(integer(-height, height), integer(1, height));
  q.canonicalize();
  return q;
}

Rational Rng::nonzero_rational(long height) {
  return draw<Rational>([&] { return rational(height); },
                        [](const Rational& q) { return q != 0; }, "nonzero rational");
}

Poly Rng::poly(int nvars, unsigned deg, long height, int max_terms) {
  const int nterms = static_cast<int>(integer(1, max_terms));
  std::vector<Term> terms;
  for (int k = 0; k < nterms; ++k) {
    std::vector<unsigned> exps(static_cast<std::size_t>(nvars), 0);
    const auto d = static_cast<unsigned>(integer(0, deg));
    for (unsigned e = 0; e < d; ++e) ++exps[static_cast<std::size_t>(integer(0, nvars - 1))];
    Rational c(integer(-height, height));
    if (c == 0) continue;
    terms.push_back({Monomial::from_exponents(exps), c});
  }
  return Poly::from_terms(std::move(terms));
}

RatFunc Rng::ratfunc(int nvars, unsigned deg, long height) {
  const Poly num = poly(nvars, deg, height);
  if (coin()) return RatFunc(num);
  const Poly den = draw<Poly>([&] { return poly(nvars, deg, height, 2); },
                              [](const Poly& p) { return !p.is_zero(); }, "denominator");
  return RatFunc(num, den);
}

RatFunc Rng::nonzero_ratfunc(int nvars, unsigned deg, long height) {
  return draw<RatFunc>([&] { return ratfunc(nvars, deg, height); },
                       [](const RatFunc& f) { return !f.is_zero(); }, "nonzero rational function");
}

RatFunc Rng::flat_ratfunc(int nvars, unsigned deg, long height) {
  return draw<RatFunc>([&] { return ratfunc(nvars, deg, height); },
                       [](const RatFunc& f) { return !f.is_zero() && !f.is_one(); },
                       "flat rational function");
}

}  // namespace infinireg
