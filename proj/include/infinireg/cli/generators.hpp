#pragma once

#include "infinireg/bloch/bloch.hpp"
#include "infinireg/cli/random.hpp"
#include "infinireg/homotopy/homotopy.hpp"
#include "infinireg/squarezero/hom.hpp"
#include "infinireg/squarezero/splitting.hpp"
#include "infinireg/symalg/truncsym.hpp"

namespace infinireg {

// Random data for property checks. Sizes stay small so that exact
// arithmetic remains fast: by default degree <= 1 numerators and denominators.

// Each D(x_j) has random coefficients, zero with probability 1/4.
Splitting random_splitting(Rng& rng, const RingSpec& spec, const SizeBounds& size = {});
// Element with flat base part; each t-coefficient is zero with probability 1/4.
SqZeroElement random_flat_element(Rng& rng, const RingSpec& spec, const SizeBounds& size = {});
// Nonzero alpha on every term.
InfBlochSum random_inf_bloch(Rng& rng, const RingSpec& spec, int terms, const SizeBounds& size = {});
// Terms in degrees [min_degree, 3] with polynomial coefficients above degree 1.
TruncSymElement random_trunc(Rng& rng, const RingSpec& spec, unsigned min_degree, int terms = 4,
                             const SizeBounds& size = {});
// Pure degree-d element (d in 2..3) of the symmetric algebra.
TruncSymElement random_homogeneous(Rng& rng, const RingSpec& spec, unsigned degree, int terms = 2,
                                   const SizeBounds& size = {});
// f: source -> target with x_j -> p_j + phi_j (p_j linear, invertible
// generically) and t_i -> psi_i.
AlgebraHom random_hom(Rng& rng, const RingSpec& source, const RingSpec& target, const SizeBounds& size = {});
// Degree 2 and 3 corrections with polynomial coefficients for every generator
// of the source.
LiftCorrections random_corrections(Rng& rng, const AlgebraHom& f, const SizeBounds& size = {});

}  // namespace infinireg
