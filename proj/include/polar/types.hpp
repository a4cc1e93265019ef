#pragma once

#include <cstdint>
#include <vector>

namespace polar {

// Dense bit vector, one bit per byte. All entries must be 0 or 1.
using BitVector = std::vector<std::uint8_t>;

// Soft-value saturation used by the channel LLR computation and by the
// pilot override in the two-phase receiver.
inline constexpr double kLlrMax = 300.0;

// Floor applied to channel-gain estimates so a noise-dominated pilot block
// cannot flip the sign of a whole block of LLRs.
inline constexpr double kGainFloor = 1e-3;

}  // namespace polar
