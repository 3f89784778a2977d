#pragma once

#include <utility>
#include <vector>

#include "hypvis/orbit_point.hpp"

namespace hypvis {

/** One row of the circle-count table at x = e^R. */
struct CountReport {
    double x = 0;            // e^R, the table key
    i64 H = 0;               // all points != i inside the circle
    i64 visible = 0;
    i64 invisible = 0;
    double error = 0;        // visible - 1.5 x + 1.5 sqrt(x)
    double approx_invisible = 0;
    double delta_star = 0;   // (visible - 1.5 x) / sqrt(x)
};

/** The closed-circle trace cap for radius log x: round(x + 1/x). */
i64 trace_bound_for_radius(double x);

/** Number of visible points z != i with trace <= max_trace. */
i64 count_visible_direct(i64 max_trace);

/**
 * The same count through Mobius inversion over ray indices:
 * sum over n of mu(n) * #{z != i : t_n(trace z) <= max_trace}, where t_n is
 * the trace-of-power sequence; the n-th term counts points within distance
 * R/n exactly, so the series is finite and the result must equal
 * count_visible_direct on the nose.
 */
i64 count_visible_mobius(i64 max_trace);

double error_term(i64 visible, double x);
double approx_invisible(double x);
double delta_star(i64 visible, double x);

/** Full table row at x = e^R. */
CountReport count_report(double x);

/**
 * The normalized remainder (visible(x') - 1.5 x')/sqrt(x') sampled on a grid
 * from 3 to x_max: equal steps in log x by default (the natural axis for the
 * remainder plot), or equal steps in x when log_spacing is false.
 */
std::vector<std::pair<double, double>> delta_star_series(double x_max, int samples,
                                                         bool log_spacing = true);

/**
 * Trapezoid estimate of (1/R) * integral of the normalized remainder over
 * [0, R], R = log x_max.  Diagnostic only: the limiting mean is asymptotic
 * and is not asserted at finite range.
 */
double mean_delta_diagnostic(double x_max, int samples = 200);

/** Coprime pairs (m, n) != (0, 0) with m^2 + n^2 <= radius^2. */
i64 euclid_visible_count(double radius);

}  // namespace hypvis
