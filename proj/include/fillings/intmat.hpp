#pragma once

#include <cstdint>
#include <vector>

namespace fl {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Fraction-free Gaussian elimination; every intermediate is an exact integer.
// Throws std::overflow_error if a value leaves the 64-bit range.
std::int64_t det_bareiss(IntMatrix m);

}  // namespace fl
