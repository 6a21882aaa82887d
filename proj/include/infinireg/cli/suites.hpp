#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "infinireg/cli/random.hpp"

namespace infinireg {

struct SuiteConfig {
  std::string suite;
  std::uint64_t seed = 1;
  int samples = 25;
  int xvars = 1;
  int tvars = 1;
  SizeBounds size;
  unsigned cap = 6;
};

const std::vector<std::string>& suite_names();

/// One PASS/FAIL line per sample, the full counterexample under each FAIL,
/// then a summary line. Samples hitting a flatness or denominator condition
/// are regenerated and not counted. True iff every sample passes.
/// PRECONDITION for an unknown suite or bad sizes.
bool run_suite(const SuiteConfig& cfg, std::ostream& out);

}  // namespace infinireg
