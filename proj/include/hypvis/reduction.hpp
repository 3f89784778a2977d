#pragma once

#include "hypvis/orbit_point.hpp"

namespace hypvis {

/**
 * Inverts gram(): finds the matrix m with m * m^t = s, normalized so that
 * a, b >= 0.  The four stabilizer translates of any solution contain either
 * one such matrix or, exactly when A == 1, two; ties resolve toward b == 0.
 * Uses the classical reduction of the binary form A x^2 + 2 B xy + D y^2 to
 * the principal form.
 */
UnimodularMatrix gram_decompose(const SymmetricGram& s);

/**
 * The distinguished matrix sending i to an interior first-quadrant point z:
 * a, b >= 0, ac + bd > 0 and a^2 + b^2 < c^2 + d^2.  Rejects the basepoint
 * and points outside the open first quadrant.
 */
UnimodularMatrix canonical_representative(const OrbitPoint& z);

}  // namespace hypvis
