#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "picard/ring.hpp"

namespace picard {

/// Seeded generator with platform-independent draws (mt19937_64 plus plain
/// modular reduction), so reports are reproducible from a seed.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return (engine_() & 1U) != 0; }
  /// Non-zero when nonzero = true. Over Q, with fractions = true, the
  /// denominator is drawn from [1, range].
  Scalar scalar(const CoeffDomain& dom, long range, bool nonzero = false, bool fractions = false);

 private:
  std::mt19937_64 engine_;
};

struct RandomShape {
  int var_degree = 2;   // total degree in the variables
  int terms = 3;
  long coeff_range = 5;
  bool fractions = false;
  bool use_generators = true;
  /// Restrict to these variable slots (empty: all).
  std::vector<std::size_t> vars;
};

Element random_element(Random& rng, const Ring& ring, const RandomShape& shape = {});
/// Random element whose generator exponents are all zero except for the listed generators.
Element random_element_in(Random& rng, const Ring& ring, const std::vector<std::size_t>& gens,
                          const RandomShape& shape = {});

}  // namespace picard
