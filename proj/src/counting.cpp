// ============================================================================
// counting.cpp -- circle counts, Mobius identity, and remainder diagnostics
// ============================================================================

#include "hypvis/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hypvis/enumeration.hpp"
#include "hypvis/visibility.hpp"

namespace hypvis {

namespace {

/** Sorted traces of the first-quadrant representatives (z != i); each stands
 *  for the four symmetric copies of the point. */
std::vector<i64> q1_traces(i64 max_trace, bool visible_only) {
    std::vector<i64> traces;
    for (const OrbitPoint& z : enumerate_points(max_trace)) {
        if (z.is_origin()) continue;
        const QuadrantInfo qi = quadrant(z);
        if (qi.q != Quadrant::Q1) continue;
        if (visible_only && !is_visible(z).visible) continue;
        traces.push_back(static_cast<i64>(z.trace()));
    }
    std::sort(traces.begin(), traces.end());
    return traces;
}

i64 count_at_most(const std::vector<i64>& sorted, i64 bound) {
    return std::upper_bound(sorted.begin(), sorted.end(), bound) - sorted.begin();
}

int mobius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

/** Largest integer trace t >= 3 with t_n(t) <= bound, or 2 if none. */
i64 trace_threshold(int n, i64 bound) {
    i64 lo = 3, hi = bound, best = 2;
    while (lo <= hi) {
        const i64 mid = lo + (hi - lo) / 2;
        bool fits = false;
        try {
            fits = trace_of_power(mid, n) <= bound;
        } catch (const arithmetic_overflow&) {
            fits = false;
        }
        if (fits) {
            best = mid;
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    return best;
}

}  // namespace

i64 trace_bound_for_radius(double x) {
    if (x <= 1.0) throw std::invalid_argument("radius key must exceed 1");
    const double n = std::round(x + 1.0 / x);
    if (n > double(kMaxEnumerationTrace)) throw std::invalid_argument("radius key too large");
    return static_cast<i64>(n);
}

i64 count_visible_direct(i64 max_trace) {
    return 4 * static_cast<i64>(q1_traces(max_trace, true).size());
}

i64 count_visible_mobius(i64 max_trace) {
    const std::vector<i64> traces = q1_traces(max_trace, false);
    i64 total = 0;
    for (int n = 1;; ++n) {
        if (trace_of_power(3, n) > max_trace) break;  // no point is that close
        const int mu = mobius(n);
        if (mu == 0) continue;
        total += mu * count_at_most(traces, trace_threshold(n, max_trace));
    }
    return 4 * total;
}

double error_term(i64 visible, double x) {
    return double(visible) - 1.5 * x + 1.5 * std::sqrt(x);
}

double approx_invisible(double x) {
    return 1.5 * (std::pow(x, 1.0 / 2) + std::pow(x, 1.0 / 3) + std::pow(x, 1.0 / 5) -
                  std::pow(x, 1.0 / 6));
}

double delta_star(i64 visible, double x) {
    return (double(visible) - 1.5 * x) / std::sqrt(x);
}

CountReport count_report(double x) {
    const i64 n = trace_bound_for_radius(x);
    CountReport r;
    r.x = x;
    r.H = count_points(n);
    r.visible = count_visible_direct(n);
    r.invisible = r.H - r.visible;
    r.error = error_term(r.visible, x);
    r.approx_invisible = approx_invisible(x);
    r.delta_star = delta_star(r.visible, x);
    return r;
}

std::vector<std::pair<double, double>> delta_star_series(double x_max, int samples,
                                                         bool log_spacing) {
    if (x_max < 3) throw std::invalid_argument("series endpoint must be at least 3");
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    // One classification pass at the top radius serves every sample:
    // a point's visibility does not depend on the circle that found it.
    const std::vector<i64> visible = q1_traces(trace_bound_for_radius(x_max), true);
    std::vector<std::pair<double, double>> out;
    out.reserve(samples);
    const double x_min = 3.0;
    for (int k = 0; k < samples; ++k) {
        const double t = samples == 1 ? 1.0 : double(k) / (samples - 1);
        const double x = log_spacing ? x_min * std::pow(x_max / x_min, t)
                                     : x_min + (x_max - x_min) * t;
        const i64 v = 4 * count_at_most(visible, trace_bound_for_radius(x));
        out.emplace_back(x, delta_star(v, x));
    }
    return out;
}

double mean_delta_diagnostic(double x_max, int samples) {
    if (x_max < 10) throw std::invalid_argument("diagnostic needs x_max >= 10");
    if (samples < 2) throw std::invalid_argument("need at least two samples");
    const std::vector<i64> visible = q1_traces(trace_bound_for_radius(x_max), true);
    const double big_r = std::log(x_max);
    auto delta_at = [&](double t) {
        const double x = std::exp(t);
        const i64 v = x <= 1.0 ? 0 : 4 * count_at_most(visible, trace_bound_for_radius(x));
        return (double(v) - 1.5 * x) / std::sqrt(x);
    };
    double integral = 0;
    double prev = delta_at(0.0);
    for (int k = 1; k <= samples; ++k) {
        const double t = big_r * k / samples;
        const double cur = delta_at(t);
        integral += 0.5 * (prev + cur) * (big_r / samples);
        prev = cur;
    }
    return integral / big_r;
}

i64 euclid_visible_count(double radius) {
    if (radius < 1) throw std::invalid_argument("radius must be at least 1");
    const i64 r = static_cast<i64>(radius);
    const i64 rr = static_cast<i64>(radius * radius);
    i64 count = 0;
    for (i64 m = -r; m <= r; ++m) {
        for (i64 n = -r; n <= r; ++n) {
            if (m == 0 && n == 0) continue;
            if (m * m + n * n > rr) continue;
            if (std::gcd(m, n) == 1) ++count;
        }
    }
    return count;
}

}  // namespace hypvis
