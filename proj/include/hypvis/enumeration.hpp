#pragma once

#include <cstdint>
#include <vector>

#include "hypvis/orbit_point.hpp"

namespace hypvis {

enum class EnumerationMethod {
    kAuto,   // sieve for large bounds, scan below
    kScan,   // trial divisibility over all B for each D
    kSieve,  // square roots of -1 modulo each D
};

struct EnumerationConfig {
    i64 max_trace = 2;  // closed bound on A + D
    bool include_origin = true;
    EnumerationMethod method = EnumerationMethod::kAuto;
};

inline constexpr i64 kMaxEnumerationTrace = i64(1) << 31;

/**
 * All orbit points with trace at most max_trace, sorted by (trace, B, D).
 * The basepoint (0,1) is the unique trace-2 point and is included unless
 * include_origin is false.  Rejects bounds above 2^31.
 */
std::vector<OrbitPoint> enumerate_points(const EnumerationConfig& cfg);

inline std::vector<OrbitPoint> enumerate_points(i64 max_trace) {
    return enumerate_points({.max_trace = max_trace});
}

/** Number of points with trace <= max_trace, never counting the basepoint. */
i64 count_points(i64 max_trace);

namespace detail {

/** Smallest prime factor for every integer in [2, n]; entries 0 and 1 unused. */
std::vector<std::uint32_t> smallest_factor_table(i64 n);

/** Square roots of -1 modulo d, ascending in [0, d).  The table must cover d. */
std::vector<i64> sqrt_minus_one_roots(i64 d, const std::vector<std::uint32_t>& spf);

}  // namespace detail

}  // namespace hypvis
