#pragma once

// Randomized invariants shared by the unit tests and the acceptance gate.

#include <cstdint>

#include "picard/report.hpp"

namespace picard::props {

/// One check per property, `cases` random instances each.
Report property_suite(std::uint64_t seed = 7, std::size_t cases = 200);

}  // namespace picard::props
