#pragma once

#include <cstdint>

namespace hvdc {

// Market time index. One step lasts `duration_h` hours (1 h by default).
using Timestep = std::int64_t;

inline constexpr double kHoursPerYear = 8760.0;

}  // namespace hvdc
