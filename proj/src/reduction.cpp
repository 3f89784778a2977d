#include "hypvis/reduction.hpp"

namespace hypvis {

namespace {

// Nearest integer to B/A, exact (ties toward even are irrelevant: any
// representative with |B + tA| <= A/2 works).
i128 round_div(i128 b, i128 a) {
    i128 q = b / a;
    i128 r = b % a;
    if (2 * r > a) ++q;
    if (2 * r < -a) --q;
    return q;
}

}  // namespace

UnimodularMatrix gram_decompose(const SymmetricGram& s) {
    // Reduce U S U^t to the identity; then U^{-1} is one valid decomposition.
    i128 A = s.A, B = s.B, D = s.D;
    UnimodularMatrix u = identity_matrix();
    while (!(A == 1 && B == 0 && D == 1)) {
        if (A > D) {
            // conjugating by j swaps the diagonal and flips the off-diagonal
            i128 t = A;
            A = D;
            B = -B;
            D = t;
            u = j_rotation() * u;
        } else {
            i128 t = -round_div(B, A);
            if (t == 0) break;  // reduced: |2B| <= A <= D forces the identity
            i128 newB = B + t * A;
            i128 newD = D + 2 * t * B + t * t * A;
            B = newB;
            D = newD;
            u = UnimodularMatrix(1, 0, static_cast<i64>(t), 1) * u;
        }
    }
    if (!(A == 1 && B == 0 && D == 1))
        throw std::logic_error("gram_decompose: reduction did not reach the principal form");

    UnimodularMatrix base = inverse(u);
    UnimodularMatrix best;
    bool found = false;
    for (const UnimodularMatrix& t : stabilizer_of_i()) {
        UnimodularMatrix cand = base * t;
        if (cand.a < 0 || cand.b < 0) continue;
        if (!found || cand.b == 0) {
            best = cand;
            found = true;
        }
    }
    if (!found) throw std::logic_error("gram_decompose: no normalized representative");
    return best;
}

UnimodularMatrix canonical_representative(const OrbitPoint& z) {
    if (z.is_origin())
        throw std::invalid_argument("canonical_representative: basepoint excluded");
    if (quadrant(z).q != Quadrant::Q1 || z.B == 0 || z.A == z.D)
        throw std::invalid_argument(
            "canonical_representative: point must lie in the open first quadrant");
    return gram_decompose(z.gram());
}

}  // namespace hypvis
