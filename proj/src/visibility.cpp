// ============================================================================
// visibility.cpp -- which orbit points can be seen from the basepoint
// ============================================================================

#include "hypvis/visibility.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "hypvis/reduction.hpp"

namespace hypvis {

namespace {

std::vector<i64> divisors_ascending(i64 v) {
    std::vector<i64> divs;
    for (i64 i = 1; i <= v / i; ++i) {
        if (v % i != 0) continue;
        divs.push_back(i);
        if (i != v / i) divs.push_back(v / i);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

VisibilityResult is_visible(const OrbitPoint& z) {
    if (z.is_origin()) throw std::invalid_argument("visibility is undefined at the basepoint");
    const OrbitPoint p = normalize_to_q1(z).point;
    const i64 B = p.B;
    const i64 gap = p.D - p.A;  // >= 1 away from the basepoint
    if (std::gcd(B, gap) == 1) return {true, std::nullopt};

    // A blocker with parameters (a, b, d) forces d - a = gap / (B/b); together
    // with a d = b^2 + 1 that pins (a, d) down, so each divisor b of B admits
    // at most one candidate.  Scan b in ascending order and return the first.
    for (i64 b : divisors_ascending(B)) {
        if (b == B) continue;
        const i64 m = B / b;
        if (gap % m != 0) continue;
        const i64 g = gap / m;
        const i128 disc = i128(g) * g + 4 * (i128(b) * b + 1);
        const i128 s = isqrt128(disc);
        if (s * s != disc) continue;
        if ((s - g) % 2 != 0) continue;
        const i64 d = static_cast<i64>((s + g) / 2);
        const i64 a = d - g;
        if (a < 1) continue;
        return {false, OcclusionWitness{a, b, d}};
    }
    return {true, std::nullopt};
}

bool is_visible_oracle(const OrbitPoint& z, std::span<const OrbitPoint> points,
                       i64 enumerated_trace_bound) {
    if (z.is_origin()) throw std::invalid_argument("visibility is undefined at the basepoint");
    if (z.trace() > enumerated_trace_bound)
        throw std::invalid_argument("point list does not cover the queried trace");
    const OrbitPoint p = normalize_to_q1(z).point;
    const i128 gz = i128(p.A) - p.D;
    for (const OrbitPoint& cand : points) {
        if (cand.is_origin()) continue;
        const OrbitPoint w = normalize_to_q1(cand).point;
        if (w.trace() >= p.trace()) continue;
        // In the first quadrant both B's are positive, so w sits on the ray
        // from the basepoint through p iff the direction vectors (B, A - D)
        // are proportional, i.e. the trace form vanishes.
        if (gz * w.B == (i128(w.A) - w.D) * p.B) return false;
    }
    return true;
}

namespace {

/** Value of the trace-of-power sequence t_k(x) at k = n, or nullopt once the
 *  (strictly increasing, x >= 3) sequence exceeds cap. */
std::optional<i128> trace_power_capped(i128 x, int n, i128 cap) {
    if (n == 0) return i128(2);
    i128 prev = 2;
    i128 cur = x;
    for (int k = 1; k < n; ++k) {
        if (cur > cap) return std::nullopt;
        const i128 next = x * cur - prev;  // bounded by cap^2 here
        prev = cur;
        cur = next;
    }
    if (cur > cap) return std::nullopt;
    return cur;
}

/** Largest n for which some trace >= 3 could satisfy t_n(trace) == target. */
int max_feasible_index(i128 target) {
    int k = 1;
    i128 prev = 2;
    i128 cur = 3;
    while (true) {
        const i128 next = 3 * cur - prev;
        if (next > target) return k;
        prev = cur;
        cur = next;
        ++k;
    }
}

}  // namespace

RayPosition ray_decompose(const OrbitPoint& z) {
    if (z.is_origin()) throw std::invalid_argument("the basepoint generates no ray");
    const SymmetricGram sz = z.gram();
    const i128 target = sz.trace();

    for (int n = max_feasible_index(target); n >= 1; --n) {
        // t_n is strictly increasing on traces >= 3: binary-search the root.
        i64 lo = 3;
        i64 hi = static_cast<i64>(target);
        i64 found = -1;
        while (lo <= hi) {
            const i64 mid = lo + (hi - lo) / 2;
            const auto val = trace_power_capped(mid, n, target);
            if (val && *val == target) {
                found = mid;
                break;
            }
            if (!val || *val > target) {
                hi = mid - 1;
            } else {
                lo = mid + 1;
            }
        }
        if (found < 0) continue;

        // S^n = c_n S - c_{n-1} I, so the candidate n-th root of the Gram is
        // (S_z + c_{n-1} I) / c_n; all three entries must divide evenly.
        i128 c_prev = 0;
        i128 c_cur = 1;
        for (int k = 1; k < n; ++k) {
            const i128 c_next = i128(found) * c_cur - c_prev;
            c_prev = c_cur;
            c_cur = c_next;
        }
        const i128 num_a = i128(sz.A) + c_prev;
        const i128 num_b = i128(sz.B);
        const i128 num_d = i128(sz.D) + c_prev;
        if (num_a % c_cur != 0 || num_b % c_cur != 0 || num_d % c_cur != 0) continue;
        const i128 ta = num_a / c_cur;
        const i128 tb = num_b / c_cur;
        const i128 td = num_d / c_cur;
        if (ta < 1 || td < 1 || ta * td - tb * tb != 1) continue;
        const SymmetricGram root(static_cast<i64>(ta), static_cast<i64>(tb),
                                 static_cast<i64>(td));
        if (!(gram_power(root, n) == sz)) continue;

        Ray ray{gram_decompose(root), root, Ratio(root.trace(), 2)};
        return RayPosition{ray, n};
    }
    throw std::logic_error("ray decomposition failed");  // n = 1 always matches
}

bool is_even_place(const OrbitPoint& z) {
    if (z.is_origin()) throw std::invalid_argument("the basepoint belongs to no ray");
    const OrbitPoint p = normalize_to_q1(z).point;
    // Even places are exactly the images of i under a symmetric matrix
    // (a b; b d), which forces B = (a+d) b and D = b^2 + d^2.
    for (i64 b : divisors_ascending(p.B)) {
        const i64 dd = p.D - b * b;
        if (dd < 1) break;  // divisors ascend; later b only grow
        const i64 d = isqrt64(dd);
        if (d * d != dd) continue;
        const i128 bb1 = i128(b) * b + 1;
        if (bb1 % d != 0) continue;
        const i128 a = bb1 / d;
        if (a < 1) continue;
        if ((a + d) * b == p.B) return true;
    }
    return false;
}

std::pair<i64, i64> v_map(const OrbitPoint& z) {
    if (z.is_origin()) throw std::invalid_argument("the companion map is undefined at the basepoint");
    const OrbitPoint p = normalize_to_q1(z).point;
    return {p.B, p.D - p.A};
}

bool visible_euclidean(i64 m, i64 n) {
    if (m == 0 && n == 0) return false;
    return std::gcd(m, n) == 1;
}

}  // namespace hypvis
