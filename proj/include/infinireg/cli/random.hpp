#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "infinireg/algebra/ratfunc.hpp"

namespace infinireg {

/// Degree and coefficient-height bounds for generated rational functions.
struct SizeBounds {
  unsigned degree = 1;
  long height = 3;
};

/// Seeded generator for exact random data. Only the raw engine output is
/// used (mapped by modulo), so streams are identical across standard
/// library implementations.
class Rng {
 public:
  static constexpr int kRetryCap = 100;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform-ish integer in [lo, hi].
  long integer(long lo, long hi);
  bool coin() { return (next() & 1u) != 0; }

  Rational rational(long height);
  Rational nonzero_rational(long height);
  // At most `max_terms` terms of total degree <= deg in the first nvars variables.
  Poly poly(int nvars, unsigned deg, long height, int max_terms = 3);
  RatFunc ratfunc(int nvars, unsigned deg, long height);
  RatFunc nonzero_ratfunc(int nvars, unsigned deg, long height);
  // Nonzero and different from 1.
  RatFunc flat_ratfunc(int nvars, unsigned deg, long height);

  // Draws until `accept` holds; throws GENERATOR_EXHAUSTED after kRetryCap tries.
  template <typename T>
  T draw(const std::function<T()>& gen, const std::function<bool(const T&)>& accept,
         const char* what) {
    for (int i = 0; i < kRetryCap; ++i) {
      T v = gen();
      if (accept(v)) return v;
    }
    throw Error(ErrorCode::GeneratorExhausted, std::string("rejection cap reached for ") + what);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace infinireg
