#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hypvis/orbit_point.hpp"
#include "hypvis/rational.hpp"

namespace hypvis {

/** The triple (a, b, d) certifying that a point is hidden: ad = b^2 + 1, b | B
 *  and B(d - a) = b(D - A) with B != b, in first-quadrant coordinates. */
struct OcclusionWitness {
    i64 a = 0;
    i64 b = 0;
    i64 d = 0;
};

struct VisibilityResult {
    bool visible = true;
    std::optional<OcclusionWitness> witness;  // present iff not visible
};

/**
 * Arithmetic visibility test.  Normalizes z to the first quadrant, applies the
 * coprimality shortcut gcd(B, D - A) = 1, then searches divisors b of B in
 * ascending order (and factor pairs of b^2 + 1 in ascending a) for a witness;
 * the first witness short-circuits.  Rejects the basepoint.
 */
VisibilityResult is_visible(const OrbitPoint& z);

/**
 * Independent geometric test: z is hidden iff some enumerated point w != i
 * with smaller trace lies on the ray from i through z (same infinite geodesic,
 * same sign of B).  Points must cover every trace below trace(z); the caller
 * passes the bound its enumeration was built with.
 */
bool is_visible_oracle(const OrbitPoint& z, std::span<const OrbitPoint> points,
                       i64 enumerated_trace_bound);

/** A ray from i: the visible point's matrix and the translation along it. */
struct Ray {
    UnimodularMatrix generator;   // sends i to the visible point of the ray
    SymmetricGram translation;    // gram(generator); shifts the ray by twice the spacing
    Ratio spacing_cosh;           // cosh of the gap between consecutive points
};

struct RayPosition {
    Ray ray;
    int index = 1;  // 1-based: the visible point itself has index 1
};

/**
 * Locates z != i on its ray: finds the maximal n with gram(z) = S^n for a
 * symmetric unimodular S; then z is the n-th point of the ray generated by S.
 * Exact, no enumeration: S is recovered as (gram(z) + c_{n-1} I) / c_n from
 * the trace recurrence, and the result is verified by exact matrix power.
 */
RayPosition ray_decompose(const OrbitPoint& z);

/** True iff z is an even-indexed point of its ray; equivalently z = t(i) for a
 *  symmetric t, detected arithmetically from B = (a+d) b, D = b^2 + d^2. */
bool is_even_place(const OrbitPoint& z);

/** The Euclidean visibility companion V(z) = (B, D - A) in Q1 coordinates. */
std::pair<i64, i64> v_map(const OrbitPoint& z);

/** Euclidean visibility of an integer pair: gcd(|m|, |n|) == 1. */
bool visible_euclidean(i64 m, i64 n);

}  // namespace hypvis
