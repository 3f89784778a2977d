#pragma once

#include <string>

#include "hypvis/orbit_point.hpp"
#include "hypvis/rational.hpp"

namespace hypvis {

/**
 * Reads a point from its textual forms "(B+i)/D" or "B/D" (whitespace
 * tolerated, B may be negative, D positive).  Throws std::invalid_argument
 * with a syntax message for malformed text and propagates the OrbitPoint
 * divisibility check for well-formed but impossible pairs.
 */
OrbitPoint parse_point(const std::string& text);

/** Reads a nonnegative decimal ("1", "0.25", ".5") as an exact fraction. */
Ratio parse_decimal_ratio(const std::string& text);

}  // namespace hypvis
