#pragma once

#include <optional>
#include <vector>

#include "infinireg/algebra/poly.hpp"

namespace infinireg {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves M x = b exactly by fraction-free (Bareiss) elimination on the
/// integer-scaled augmented matrix. Rectangular and rank-deficient systems are
/// accepted; free unknowns are set to zero. Returns nullopt when inconsistent.
std::optional<std::vector<Rational>> linear_solve_exact(const RationalMatrix& m,
                                                        const std::vector<Rational>& b);

}  // namespace infinireg
