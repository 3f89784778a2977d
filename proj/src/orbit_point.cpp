#include "hypvis/orbit_point.hpp"

#include <ostream>
#include <tuple>

namespace hypvis {

OrbitPoint::OrbitPoint(i64 B_, i64 D_) : B(B_), D(D_) {
    if (D < 1) throw std::invalid_argument("OrbitPoint: D must be >= 1");
    i128 m = i128(B) * B + 1;
    if (m % D != 0) throw std::invalid_argument("OrbitPoint: D must divide B^2 + 1");
    i128 a = m / D;
    if (a > INT64_MAX) throw arithmetic_overflow("OrbitPoint: cofactor too large");
    A = static_cast<i64>(a);
    if (trace() > kTraceLimit) throw arithmetic_overflow("OrbitPoint: trace too large");
}

bool orbit_order(const OrbitPoint& l, const OrbitPoint& r) {
    return std::tuple(l.trace(), l.B, l.D) < std::tuple(r.trace(), r.B, r.D);
}

OrbitPoint apply_to_i(const UnimodularMatrix& m) {
    i64 B = static_cast<i64>(i128(m.a) * m.c + i128(m.b) * m.d);
    i64 D = static_cast<i64>(i128(m.c) * m.c + i128(m.d) * m.d);
    return OrbitPoint(B, D);
}

QuadrantInfo quadrant(const OrbitPoint& z) {
    // |z|^2 = A/D, so |z| <= 1 iff A <= D; Re z has the sign of B.
    if (z.is_origin()) return {Quadrant::Q1, true};
    if (z.B >= 0) return {z.A <= z.D ? Quadrant::Q1 : Quadrant::Q2, false};
    return {z.A <= z.D ? Quadrant::Q4 : Quadrant::Q3, false};
}

OrbitPoint apply_symmetry(const OrbitPoint& z, int k) {
    switch (k) {
        case 1: return z;
        case 2: return OrbitPoint(z.B, z.A);
        case 3: return OrbitPoint(-z.B, z.A);
        case 4: return OrbitPoint(-z.B, z.D);
    }
    throw std::invalid_argument("apply_symmetry: k must be 1..4");
}

UnimodularMatrix conjugate_by_symmetry(const UnimodularMatrix& m, int k) {
    // k=2: (a b; c d) -> (-c d; -a b), k=3: left-multiply by j, k=4: both.
    switch (k) {
        case 1: return m;
        case 2: return UnimodularMatrix(-m.c, m.d, -m.a, m.b);
        case 3: return j_rotation() * m;
        case 4: {
            UnimodularMatrix t = j_rotation() * m;
            return UnimodularMatrix(-t.c, t.d, -t.a, t.b);
        }
    }
    throw std::invalid_argument("conjugate_by_symmetry: k must be 1..4");
}

NormalizedPoint normalize_to_q1(const OrbitPoint& z) {
    if (z.is_origin()) throw std::invalid_argument("normalize_to_q1: basepoint has no quadrant rep");
    switch (quadrant(z).q) {
        case Quadrant::Q1: return {z, 1};
        case Quadrant::Q2: return {apply_symmetry(z, 2), 2};
        case Quadrant::Q3: return {apply_symmetry(z, 3), 3};
        case Quadrant::Q4: return {apply_symmetry(z, 4), 4};
    }
    throw std::logic_error("normalize_to_q1: unreachable");
}

Ratio cosh_distance_to_i(const OrbitPoint& z) { return Ratio(z.trace(), 2); }

Ratio cosh_distance(const OrbitPoint& z, const OrbitPoint& w) {
    // cosh d = 1 + |z - w|^2 / (2 Im z Im w) with Im = 1/D.
    i128 cross = sub128(mul128(z.B, w.D), mul128(w.B, z.D));
    i128 num = add128(mul128(cross, cross), mul128(i128(w.D) - z.D, i128(w.D) - z.D));
    i128 den = mul128(2, mul128(z.D, w.D));
    return Ratio(add128(den, num), den);
}

i128 geodesic_trace_form(const OrbitPoint& z, const OrbitPoint& w) {
    return sub128(mul128(z.B, i128(w.A) - w.D), mul128(w.B, i128(z.A) - z.D));
}

Ratio sinh_sq_to_geodesic(const OrbitPoint& z, const OrbitPoint& w) {
    if (w.is_origin())
        throw std::invalid_argument("sinh_sq_to_geodesic: w must differ from the basepoint");
    i128 t = geodesic_trace_form(z, w);
    i128 tw = w.trace();
    return Ratio(mul128(t, t), sub128(mul128(tw, tw), 4));
}

i64 sinh_distance_to_axis(const OrbitPoint& z) { return z.B < 0 ? -z.B : z.B; }

std::ostream& operator<<(std::ostream& os, const OrbitPoint& z) {
    return os << "(" << z.B << "+i)/" << z.D;
}

}  // namespace hypvis
