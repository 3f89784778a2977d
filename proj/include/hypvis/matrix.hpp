#pragma once

#include <array>
#include <iosfwd>

#include "hypvis/int_ops.hpp"

namespace hypvis {

// Entries and traces are capped so that any product of two admissible values,
// and any squared trace, stays inside signed 128-bit arithmetic.
inline constexpr i128 kTraceLimit = i128(1) << 62;

/** Integer 2x2 matrix with determinant one. */
struct UnimodularMatrix {
    i64 a = 1, b = 0, c = 0, d = 1;

    UnimodularMatrix() = default;
    UnimodularMatrix(i64 a_, i64 b_, i64 c_, i64 d_);

    i128 det() const { return i128(a) * d - i128(b) * c; }

    bool operator==(const UnimodularMatrix&) const = default;
};

/** Symmetric positive 2x2 matrix of determinant one (the Gram of an orbit point). */
struct SymmetricGram {
    i64 A = 1, B = 0, D = 1;

    SymmetricGram() = default;
    SymmetricGram(i64 A_, i64 B_, i64 D_);

    i128 trace() const { return i128(A) + D; }

    bool operator==(const SymmetricGram&) const = default;
};

UnimodularMatrix operator*(const UnimodularMatrix& l, const UnimodularMatrix& r);
UnimodularMatrix transpose(const UnimodularMatrix& m);
UnimodularMatrix inverse(const UnimodularMatrix& m);

/** Sum of squared entries; equals 2 cosh of the distance from i to the image of i. */
i128 trace_norm(const UnimodularMatrix& m);

/** The Gram matrix m * m^t. */
SymmetricGram gram(const UnimodularMatrix& m);

UnimodularMatrix identity_matrix();
/** The order-four rotation (0 -1; 1 0). */
UnimodularMatrix j_rotation();
/** The four matrices fixing i: {I, j, -I, -j}. */
std::array<UnimodularMatrix, 4> stabilizer_of_i();

/** S^n for n >= 0, via S^n = c_n S - c_{n-1} I with the trace recurrence. */
SymmetricGram gram_power(const SymmetricGram& s, int n);

/** 2*T_n(x/2): the trace of S^n as a function of the trace x of S. Overflow-checked. */
i128 trace_of_power(i128 x, int n);

std::ostream& operator<<(std::ostream& os, const UnimodularMatrix& m);
std::ostream& operator<<(std::ostream& os, const SymmetricGram& s);

}  // namespace hypvis
