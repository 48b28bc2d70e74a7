#pragma once

#include <cstdint>
#include <ostream>

namespace heegaard {

// Randomized oracle-equivalence checks on instances with |T| <= max_size:
// SNF recomposition, closed-form vs enumerated Gauss sums, normal-form vs
// lagrangian linking, and the isometry square law.  One transcript line per
// property; identical for identical arguments.  Returns the failure count.
int run_selftest(std::uint64_t max_size, std::uint64_t seed, std::ostream& log, int cases = 25);

}  // namespace heegaard
