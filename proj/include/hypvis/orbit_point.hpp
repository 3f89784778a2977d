#pragma once

#include <iosfwd>

#include "hypvis/matrix.hpp"
#include "hypvis/rational.hpp"

namespace hypvis {

/**
 * A point (B + i)/D of the orbit of i under the modular group.  D >= 1 divides
 * B^2 + 1; the cofactor A = (B^2 + 1)/D completes the Gram matrix (A B; B D).
 * The basepoint i itself is (0, 1).
 */
struct OrbitPoint {
    i64 B = 0;
    i64 D = 1;
    i64 A = 1;  // derived: (B^2 + 1) / D

    OrbitPoint() = default;
    OrbitPoint(i64 B_, i64 D_);

    i128 trace() const { return i128(A) + D; }
    bool is_origin() const { return B == 0 && D == 1; }
    SymmetricGram gram() const { return SymmetricGram(A, B, D); }

    double re() const { return double(B) / double(D); }
    double im() const { return 1.0 / double(D); }

    bool operator==(const OrbitPoint&) const = default;
};

/** Sort key used everywhere: ascending (trace, B, D). */
bool orbit_order(const OrbitPoint& l, const OrbitPoint& r);

/** The image of i under m: ((ac+bd) + i) / (c^2 + d^2). */
OrbitPoint apply_to_i(const UnimodularMatrix& m);

enum class Quadrant { Q1 = 1, Q2 = 2, Q3 = 3, Q4 = 4 };

struct QuadrantInfo {
    Quadrant q;
    bool on_boundary;  // true only for the basepoint i
};

/**
 * Quadrant of a point: Q1 = {|z| <= 1, Re >= 0}, Q2 = {|z| >= 1, Re >= 0},
 * Q3 = {|z| >= 1, Re <= 0}, Q4 = {|z| <= 1, Re <= 0}.  Only i sits on a
 * boundary; it reports Q1.
 */
QuadrantInfo quadrant(const OrbitPoint& z);

/**
 * The four unit-circle symmetries: k=1 identity, k=2 inverted conjugate
 * (B,D) -> (B,A), k=3 negated inverse (B,D) -> (-B,A), k=4 mirrored (B,D) -> (-B,D).
 * Each maps the orbit to itself and is an involution.
 */
OrbitPoint apply_symmetry(const OrbitPoint& z, int k);

/** Conjugates m so that apply_to_i(conjugate_by_symmetry(m,k)) == apply_symmetry(apply_to_i(m),k). */
UnimodularMatrix conjugate_by_symmetry(const UnimodularMatrix& m, int k);

struct NormalizedPoint {
    OrbitPoint point;
    int symmetry;  // the k with apply_symmetry(z, k) == point
};

/** Moves z != i into the first quadrant; records which symmetry did it. */
NormalizedPoint normalize_to_q1(const OrbitPoint& z);

/** cosh of the hyperbolic distance from i: trace / 2. */
Ratio cosh_distance_to_i(const OrbitPoint& z);

/** cosh of the hyperbolic distance between two orbit points, exact. */
Ratio cosh_distance(const OrbitPoint& z, const OrbitPoint& w);

/**
 * The trace form Tr(S_z * j * S_w) = B_z (A_w - D_w) - B_w (A_z - D_z).
 * Zero exactly when z lies on the infinite geodesic through i and w; always even.
 */
i128 geodesic_trace_form(const OrbitPoint& z, const OrbitPoint& w);

/**
 * sinh^2 of the distance from z to the infinite geodesic through i and w,
 * as the exact value T^2 / (trace(w)^2 - 4).  Requires w != i.
 */
Ratio sinh_sq_to_geodesic(const OrbitPoint& z, const OrbitPoint& w);

/** sinh of the distance from z to the imaginary axis equals |B| exactly. */
i64 sinh_distance_to_axis(const OrbitPoint& z);

std::ostream& operator<<(std::ostream& os, const OrbitPoint& z);

}  // namespace hypvis
