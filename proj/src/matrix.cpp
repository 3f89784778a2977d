#include "hypvis/matrix.hpp"

#include <ostream>

namespace hypvis {

namespace {

i64 narrow(i128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) throw arithmetic_overflow(what);
    return static_cast<i64>(v);
}

}  // namespace

UnimodularMatrix::UnimodularMatrix(i64 a_, i64 b_, i64 c_, i64 d_) : a(a_), b(b_), c(c_), d(d_) {
    if (det() != 1) throw std::invalid_argument("UnimodularMatrix: determinant must be 1");
    if (trace_norm(*this) > kTraceLimit)
        throw arithmetic_overflow("UnimodularMatrix: entries too large");
}

SymmetricGram::SymmetricGram(i64 A_, i64 B_, i64 D_) : A(A_), B(B_), D(D_) {
    if (i128(A) * D - i128(B) * B != 1)
        throw std::invalid_argument("SymmetricGram: determinant must be 1");
    if (A < 1 || D < 1) throw std::invalid_argument("SymmetricGram: must be positive");
    if (trace() > kTraceLimit) throw arithmetic_overflow("SymmetricGram: trace too large");
}

UnimodularMatrix operator*(const UnimodularMatrix& l, const UnimodularMatrix& r) {
    i64 a = narrow(i128(l.a) * r.a + i128(l.b) * r.c, "matrix product");
    i64 b = narrow(i128(l.a) * r.b + i128(l.b) * r.d, "matrix product");
    i64 c = narrow(i128(l.c) * r.a + i128(l.d) * r.c, "matrix product");
    i64 d = narrow(i128(l.c) * r.b + i128(l.d) * r.d, "matrix product");
    return UnimodularMatrix(a, b, c, d);
}

UnimodularMatrix transpose(const UnimodularMatrix& m) {
    return UnimodularMatrix(m.a, m.c, m.b, m.d);
}

UnimodularMatrix inverse(const UnimodularMatrix& m) {
    return UnimodularMatrix(m.d, -m.b, -m.c, m.a);
}

i128 trace_norm(const UnimodularMatrix& m) {
    return i128(m.a) * m.a + i128(m.b) * m.b + i128(m.c) * m.c + i128(m.d) * m.d;
}

SymmetricGram gram(const UnimodularMatrix& m) {
    i64 A = narrow(i128(m.a) * m.a + i128(m.b) * m.b, "gram entry");
    i64 B = narrow(i128(m.a) * m.c + i128(m.b) * m.d, "gram entry");
    i64 D = narrow(i128(m.c) * m.c + i128(m.d) * m.d, "gram entry");
    return SymmetricGram(A, B, D);
}

UnimodularMatrix identity_matrix() { return UnimodularMatrix(1, 0, 0, 1); }

UnimodularMatrix j_rotation() { return UnimodularMatrix(0, -1, 1, 0); }

std::array<UnimodularMatrix, 4> stabilizer_of_i() {
    return {UnimodularMatrix(1, 0, 0, 1), UnimodularMatrix(0, -1, 1, 0),
            UnimodularMatrix(-1, 0, 0, -1), UnimodularMatrix(0, 1, -1, 0)};
}

SymmetricGram gram_power(const SymmetricGram& s, int n) {
    if (n < 0) throw std::invalid_argument("gram_power: negative exponent");
    if (n == 0) return SymmetricGram(1, 0, 1);
    // S^n = c_n S - c_{n-1} I where c_0 = 0, c_1 = 1, c_{k+1} = tr(S) c_k - c_{k-1}.
    i128 x = s.trace();
    i128 c0 = 0, c1 = 1;
    for (int k = 1; k < n; ++k) {
        i128 next = sub128(mul128(x, c1), c0);
        c0 = c1;
        c1 = next;
    }
    i64 A = narrow(sub128(mul128(c1, s.A), c0), "gram power");
    i64 B = narrow(mul128(c1, s.B), "gram power");
    i64 D = narrow(sub128(mul128(c1, s.D), c0), "gram power");
    return SymmetricGram(A, B, D);
}

i128 trace_of_power(i128 x, int n) {
    if (n < 0) throw std::invalid_argument("trace_of_power: negative exponent");
    i128 a = 2, b = x;
    if (n == 0) return a;
    for (int k = 1; k < n; ++k) {
        i128 next = sub128(mul128(x, b), a);
        a = b;
        b = next;
    }
    return b;
}

std::ostream& operator<<(std::ostream& os, const UnimodularMatrix& m) {
    return os << "(" << m.a << "," << m.b << ";" << m.c << "," << m.d << ")";
}

std::ostream& operator<<(std::ostream& os, const SymmetricGram& s) {
    return os << "(" << s.A << "," << s.B << ";" << s.B << "," << s.D << ")";
}

}  // namespace hypvis
