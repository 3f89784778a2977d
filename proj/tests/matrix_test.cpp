#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "hypvis/matrix.hpp"

using namespace hypvis;

namespace {

// Random walk on the generators keeps determinant one while the trace norm
// stays below the requested cap.
UnimodularMatrix random_unimodular(std::mt19937_64& rng, i128 norm_cap) {
    UnimodularMatrix m = identity_matrix();
    UnimodularMatrix gens[4] = {
        UnimodularMatrix(1, 1, 0, 1), UnimodularMatrix(1, -1, 0, 1),
        UnimodularMatrix(1, 0, 1, 1), UnimodularMatrix(1, 0, -1, 1)};
    for (int step = 0; step < 64; ++step) {
        UnimodularMatrix next = m * gens[rng() % 4];
        if (trace_norm(next) > norm_cap) break;
        m = next;
    }
    return m;
}

}  // namespace

TEST_CASE("constructors validate their invariants") {
    CHECK_NOTHROW(UnimodularMatrix(2, 1, 3, 2));
    CHECK_THROWS_AS(UnimodularMatrix(2, 0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(UnimodularMatrix(1, 0, 0, -1), std::invalid_argument);
    CHECK_NOTHROW(SymmetricGram(5, 8, 13));
    CHECK_THROWS_AS(SymmetricGram(5, 8, 12), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricGram(-1, 0, -1), std::invalid_argument);
    // Determinant-one inputs whose size alone breaks the trace guard.
    CHECK_THROWS_AS(UnimodularMatrix(1, i64(1) << 32, 0, 1), arithmetic_overflow);
    CHECK_THROWS_AS(SymmetricGram(1, i64(1) << 31, (i64(1) << 62) + 1), arithmetic_overflow);
}

TEST_CASE("trace norm examples") {
    CHECK(trace_norm(identity_matrix()) == 2);
    CHECK(trace_norm(j_rotation()) == 2);
    CHECK(trace_norm(UnimodularMatrix(2, 1, 3, 2)) == 18);
    CHECK(trace_norm(UnimodularMatrix(1, 3, 2, 7)) == 63);
}

TEST_CASE("gram examples") {
    SymmetricGram g = gram(UnimodularMatrix(2, 1, 3, 2));
    CHECK(g == SymmetricGram(5, 8, 13));
    CHECK(gram(UnimodularMatrix(1, 3, 2, 7)) == SymmetricGram(10, 23, 53));
    CHECK(gram(identity_matrix()) == SymmetricGram(1, 0, 1));
    CHECK(gram(j_rotation()) == SymmetricGram(1, 0, 1));
}

TEST_CASE("product, transpose, inverse") {
    UnimodularMatrix m(2, 1, 3, 2), n(1, 3, 2, 7);
    UnimodularMatrix p = m * n;
    CHECK(p == UnimodularMatrix(4, 13, 7, 23));
    CHECK(transpose(m) == UnimodularMatrix(2, 3, 1, 2));
    CHECK(m * inverse(m) == identity_matrix());
    CHECK(inverse(m) * m == identity_matrix());
}

TEST_CASE("trace norm identity: |mn|^2 relation") {
    // For any g, Tr(g g^t) = Tr(gram(g)); products keep determinant one.
    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; ++k) {
        UnimodularMatrix m = random_unimodular(rng, i128(1) << 40);
        SymmetricGram s = gram(m);
        CHECK(trace_norm(m) == s.trace());
        CHECK(s.A >= 1);
        CHECK(i128(s.A) * s.D - i128(s.B) * s.B == 1);
        // gram of the transpose is the reversed product m^t m, same trace.
        CHECK(gram(transpose(m)).trace() == s.trace());
    }
}

TEST_CASE("stabilizer of i gives a four-to-one gram map") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
        UnimodularMatrix m = random_unimodular(rng, i128(1) << 40);
        std::set<std::array<i64, 4>> translates;
        for (const UnimodularMatrix& s : stabilizer_of_i()) {
            UnimodularMatrix t = m * s;
            CHECK(gram(t) == gram(m));
            translates.insert({t.a, t.b, t.c, t.d});
        }
        CHECK(translates.size() == 4);
    }
}

TEST_CASE("gram_power matches repeated multiplication") {
    SymmetricGram s(1, 1, 2);
    SymmetricGram acc(1, 0, 1);
    // acc tracks S^k as an explicit 2x2 product via its defining recurrence.
    i128 a = 1, b = 0, d = 1;
    for (int k = 0; k <= 12; ++k) {
        SymmetricGram p = gram_power(s, k);
        CHECK(i128(p.A) == a);
        CHECK(i128(p.B) == b);
        CHECK(i128(p.D) == d);
        i128 na = a * s.A + b * s.B;
        i128 nb = a * s.B + b * s.D;
        i128 nd = b * s.B + d * s.D;
        a = na;
        b = nb;
        d = nd;
    }
    CHECK(gram_power(s, 0) == SymmetricGram(1, 0, 1));
    CHECK(gram_power(s, 1) == s);
    CHECK_THROWS_AS(gram_power(s, -1), std::invalid_argument);
    (void)acc;
}

TEST_CASE("trace_of_power follows the Chebyshev recurrence") {
    CHECK(trace_of_power(3, 0) == 2);
    CHECK(trace_of_power(3, 1) == 3);
    CHECK(trace_of_power(3, 2) == 7);
    CHECK(trace_of_power(3, 3) == 18);
    CHECK(trace_of_power(3, 4) == 47);
    for (i128 x : {i128(3), i128(10), i128(70)}) {
        for (int n = 2; n <= 10; ++n) {
            CHECK(trace_of_power(x, n) ==
                  x * trace_of_power(x, n - 1) - trace_of_power(x, n - 2));
        }
    }
    // Trace of S^n equals the polynomial in the trace of S.
    SymmetricGram s(1, 1, 2);
    for (int n = 0; n <= 12; ++n) {
        CHECK(gram_power(s, n).trace() == trace_of_power(s.trace(), n));
    }
    CHECK_THROWS_AS(trace_of_power((i128(1) << 80), 3), arithmetic_overflow);
}
