// ============================================================================
// orchard.cpp -- eclipse thresholds, the negative orchard bound, and blocking
// ============================================================================

#include "hypvis/orchard.hpp"

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "hypvis/enumeration.hpp"
#include "hypvis/visibility.hpp"

namespace hypvis {

namespace {

using boost::multiprecision::cpp_int;

cpp_int wide(i128 v) { return cpp_int(v); }

/** Non-obtuse angle at i in the triangle (i, z, w). */
bool foot_toward_w(const OrbitPoint& z, const OrbitPoint& w, const Ratio& cosh_zw) {
    return Ratio(mul128(z.trace(), w.trace()), 4) >= cosh_zw;
}

/** Non-obtuse angle at w in the triangle (i, z, w). */
bool foot_toward_i(const OrbitPoint& z, const OrbitPoint& w, const Ratio& cosh_zw) {
    return Ratio(w.trace(), 2) * cosh_zw >= Ratio(z.trace(), 2);
}

i128 checked_trace_form(const OrbitPoint& z, const OrbitPoint& w) {
    const i128 t = geodesic_trace_form(z, w);
    if (t % 2 != 0) throw std::logic_error("trace form parity violated");
    return t;
}

}  // namespace

EclipseThreshold eclipse_threshold(const OrbitPoint& z, const OrbitPoint& w) {
    if (z.is_origin() || w.is_origin())
        throw std::invalid_argument("threshold needs points != i");
    if (z.trace() > w.trace())
        throw std::invalid_argument("threshold needs trace(z) <= trace(w)");
    EclipseThreshold th;
    th.trace_form = checked_trace_form(z, w);
    th.sinh_sq = sinh_sq_to_geodesic(z, w);
    return th;
}

bool eclipses_segment(const OrbitPoint& z, const OrbitPoint& w, const Ratio& sinh_eps) {
    if (z.is_origin() || w.is_origin())
        throw std::invalid_argument("eclipse test needs points != i");
    if (sinh_eps < Ratio::integer(0)) throw std::invalid_argument("negative radius");
    const Ratio cosh_zw = cosh_distance(z, w);
    // Radii coming from Ratio::from_double can carry ~2^60 denominators, so
    // squaring them would not fit a 128-bit Ratio.  With sinh_eps = p/q the
    // needed squares are sinh^2 = p^2/q^2 and cosh^2 = (p^2 + q^2)/q^2;
    // compare those cross-multiplied in arbitrary-width integers.
    const cpp_int p2 = wide(sinh_eps.num()) * wide(sinh_eps.num());
    const cpp_int q2 = wide(sinh_eps.den()) * wide(sinh_eps.den());
    const bool at_i = foot_toward_w(z, w, cosh_zw);
    const bool at_w = foot_toward_i(z, w, cosh_zw);
    if (at_i && at_w) {
        const i128 t = checked_trace_form(z, w);
        const i128 nw2 = sub128(mul128(w.trace(), w.trace()), 4);
        return p2 * wide(nw2) >= wide(t) * wide(t) * q2;
    }
    if (!at_i)  // nearest segment point is the endpoint i
        return (p2 + q2) * 4 >= wide(z.trace()) * wide(z.trace()) * q2;
    // nearest segment point is the endpoint w
    return (p2 + q2) * wide(cosh_zw.den()) * wide(cosh_zw.den()) >=
           wide(cosh_zw.num()) * wide(cosh_zw.num()) * q2;
}

MinEclipse min_eclipse_epsilon(i64 max_trace) {
    if (max_trace < 3) throw std::invalid_argument("needs a circle containing points");
    const std::vector<OrbitPoint> pts = enumerate_points({max_trace, false});
    std::optional<MinEclipse> best;
    for (const OrbitPoint& z : pts) {
        for (const OrbitPoint& w : pts) {
            if (z == w || z.trace() > w.trace()) continue;
            const i128 t = checked_trace_form(z, w);
            if (t == 0 && (z.B > 0) == (w.B > 0)) continue;  // same ray
            // Under the trace ordering the angle at w is never obtuse, so the
            // distance is either the perpendicular or the distance to i; both
            // candidates are known before the angle test, which lets pairs
            // that cannot improve the minimum skip the distance computation.
            const Ratio foot_value(mul128(t, t), sub128(mul128(w.trace(), w.trace()), 4));
            const Ratio endpoint_value(sub128(mul128(z.trace(), z.trace()), 4), 4);
            if (best && !(foot_value < best->sinh_sq) && !(endpoint_value < best->sinh_sq))
                continue;
            const Ratio cosh_zw = cosh_distance(z, w);
            const Ratio value = foot_toward_w(z, w, cosh_zw) ? foot_value : endpoint_value;
            if (!best || value < best->sinh_sq) best = MinEclipse{value, z, w, t};
        }
    }
    return *best;  // nonempty: distinct trace-3 points always exist
}

namespace {

i64 fibonacci_number(int k) {
    i64 a = 0, b = 1;
    for (int i = 0; i < k; ++i) {
        const i64 next = static_cast<i64>(add128(a, b));
        a = b;
        b = next;
    }
    return a;
}

}  // namespace

FibonacciPair fibonacci_pair(int n) {
    if (n < 1) throw std::invalid_argument("pair index starts at 1");
    if (n > kMaxFibonacciIndex) throw arithmetic_overflow("Fibonacci pair index too large");
    const auto f = [](int k) { return fibonacci_number(k); };
    FibonacciPair p;
    p.n = n;
    p.gamma = UnimodularMatrix(f(6 * n - 1), f(6 * n - 2), f(6 * n + 1), f(6 * n));
    p.tau = UnimodularMatrix(f(6 * n - 1), f(6 * n), f(6 * n + 1), f(6 * n + 2));
    if (!(gram(p.gamma) == SymmetricGram(f(12 * n - 3), f(12 * n - 1), f(12 * n + 1))) ||
        !(gram(p.tau) == SymmetricGram(f(12 * n - 1), f(12 * n + 1), f(12 * n + 3))))
        throw std::logic_error("Fibonacci Gram identity violated");
    p.inner = apply_to_i(p.gamma);
    p.outer = apply_to_i(p.tau);
    p.trace_form = checked_trace_form(p.inner, p.outer);
    if (p.trace_form != -2) throw std::logic_error("Fibonacci trace form is not -2");
    if (!is_visible(p.inner).visible || !is_visible(p.outer).visible)
        throw std::logic_error("Fibonacci pair points must be visible");
    p.sinh_sq = eclipse_threshold(p.inner, p.outer).sinh_sq;
    return p;
}

std::vector<OrbitPoint> default_far_sweep(i64 max_trace, i64 far_factor, i64 axis_max) {
    if (far_factor < 2) throw std::invalid_argument("far factor must be at least 2");
    std::vector<OrbitPoint> far;
    for (const OrbitPoint& z : enumerate_points({far_factor * max_trace, false}))
        if (z.trace() > max_trace) far.push_back(z);
    for (i64 n = 1; n <= axis_max; ++n) {
        if (i128(n) * n + 2 > kTraceLimit) break;
        const OrbitPoint p(n, n * n + 1);
        if (p.trace() <= max_trace) continue;
        if (p.trace() <= far_factor * max_trace) continue;  // already in the sweep
        far.push_back(p);
    }
    return far;
}

BlockingReport blocking_check(const Ratio& sinh_eps, i64 max_trace,
                              std::span<const OrbitPoint> far_points) {
    const std::vector<OrbitPoint> blockers = enumerate_points({max_trace, false});
    BlockingReport report;
    report.far_count = far_points.size();
    report.blocker_count = blockers.size();
    for (const OrbitPoint& w : far_points) {
        bool eclipsed = false;
        for (const OrbitPoint& z : blockers) {
            if (eclipses_segment(z, w, sinh_eps)) {
                eclipsed = true;
                break;
            }
        }
        if (!eclipsed) {
            report.blocked = false;
            report.witness = w;
            return report;
        }
    }
    report.blocked = true;
    return report;
}

}  // namespace hypvis
