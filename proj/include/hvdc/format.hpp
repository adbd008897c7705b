#pragma once

#include <string>

namespace hvdc {

// Shortest decimal text that parses back to exactly `v` ("500", "0.00635").
std::string format_number(double v);

// Fixed two decimals, for human-facing tables.
std::string format_cents(double v);

}  // namespace hvdc
