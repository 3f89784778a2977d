#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hypvis/orbit_point.hpp"
#include "hypvis/rational.hpp"

namespace hypvis {

/** Exact squared sinh of the smallest disk radius with which z eclipses w,
 *  in the perpendicular-foot configuration. */
struct EclipseThreshold {
    i128 trace_form = 0;  // Tr(S_z j S_w); always even for orbit points
    Ratio sinh_sq;        // trace_form^2 / (trace(w)^2 - 4)
};

/**
 * Threshold for the ordered pair trace(z) <= trace(w), both != i: the squared
 * sinh of the distance from z to the full geodesic through i and w.  Verifies
 * the evenness of the trace form on every call.
 */
EclipseThreshold eclipse_threshold(const OrbitPoint& z, const OrbitPoint& w);

/**
 * Does the closed disk of radius arcsinh(sinh_eps) around z meet the closed
 * geodesic segment from i to w?  Exact: picks the perpendicular-foot or the
 * nearer-endpoint distance according to the two angle tests.
 */
bool eclipses_segment(const OrbitPoint& z, const OrbitPoint& w, const Ratio& sinh_eps);

/** The smallest pairwise eclipse threshold within a circle, with the first
 *  pair (in enumeration order) attaining it. */
struct MinEclipse {
    Ratio sinh_sq;
    OrbitPoint z;
    OrbitPoint w;
    i128 trace_form = 0;
};

/**
 * Minimum of the segment-distance threshold over ordered pairs z != w with
 * trace(z) <= trace(w) from the full enumeration at max_trace, skipping
 * same-ray pairs (whose threshold is trivially zero).  Satisfies
 * sinh_sq * (max_trace^2 - 4) >= 4.
 */
MinEclipse min_eclipse_epsilon(i64 max_trace);

/** Sharpness construction: a visible pair one step apart in trace whose
 *  eclipse threshold meets the pairwise bound with equality. */
struct FibonacciPair {
    int n = 1;
    UnimodularMatrix gamma;   // sends i to the inner point
    UnimodularMatrix tau;     // sends i to the outer point
    OrbitPoint inner;         // gamma(i)
    OrbitPoint outer;         // tau(i)
    i128 trace_form = 0;      // always -2
    Ratio sinh_sq;            // 4 / (trace(outer)^2 - 4)
};

/** Largest n for which the entry F_{12n+3} stays inside the trace guard. */
inline constexpr int kMaxFibonacciIndex = 7;

/**
 * Builds the n-th pair from consecutive Fibonacci numbers
 * gamma = (F_{6n-1} F_{6n-2}; F_{6n+1} F_{6n}), tau = (F_{6n-1} F_{6n}; F_{6n+1} F_{6n+2})
 * and checks all its defining identities: both Grams are Fibonacci triples,
 * the trace form is -2, and both image points are visible.
 */
FibonacciPair fibonacci_pair(int n);

struct BlockingReport {
    bool blocked = false;               // every far point eclipsed by some near point
    std::optional<OrbitPoint> witness;  // first far point seen past all disks
    std::size_t far_count = 0;
    std::size_t blocker_count = 0;
};

/**
 * Far points probing all directions: every orbit point with
 * max_trace < trace <= far_factor * max_trace, plus the axis-hugging family
 * (n + i)/(n^2 + 1) for n up to axis_max (deduplicated, appended in order).
 */
std::vector<OrbitPoint> default_far_sweep(i64 max_trace, i64 far_factor = 4,
                                          i64 axis_max = 1000);

/** True iff every far point is eclipsed by some enumerated point of trace
 *  <= max_trace when all near disks get radius arcsinh(sinh_eps). */
BlockingReport blocking_check(const Ratio& sinh_eps, i64 max_trace,
                              std::span<const OrbitPoint> far_points);

}  // namespace hypvis
