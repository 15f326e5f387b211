#pragma once

#include <cstdint>
#include <optional>

#include "picard/matrix.hpp"
#include "picard/report.hpp"

namespace picard {

struct MobiusOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  /// Candidate generators a = p + y q use deg p, deg q in [1, degree_bound];
  /// 0 leaves the sample empty.
  int degree_bound = 3;
  /// Replaces Q (mutation testing).
  std::optional<Matrix> q_override;
};

/// Certificates for the circle ring A = Q[x, y]/(x^2 + y^2 - 1), the module
/// M = Im(Q) and the ideal I = (1 + x, y).
Report mobius_suite(const MobiusOptions& opt = {});

}  // namespace picard
