#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hypvis {

using i64 = std::int64_t;
using i128 = __int128;
using u128 = unsigned __int128;

/** Thrown when a result would not fit the configured integer width. */
struct arithmetic_overflow : std::overflow_error {
    explicit arithmetic_overflow(const std::string& what) : std::overflow_error(what) {}
};

inline i128 abs128(i128 x) { return x < 0 ? -x : x; }

inline i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline i128 add128(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw arithmetic_overflow("128-bit add");
    return r;
}

inline i128 sub128(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw arithmetic_overflow("128-bit subtract");
    return r;
}

inline i128 mul128(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_overflow("128-bit multiply");
    return r;
}

/** Largest r >= 0 with r*r <= x. */
inline i64 isqrt64(i64 x) {
    if (x < 0) throw std::invalid_argument("isqrt64: negative argument");
    if (x < 2) return x;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r > x / r) --r;
    while ((r + 1) <= x / (r + 1)) ++r;
    return r;
}

/** Largest r >= 0 with r*r <= x, for 0 <= x < 2^126. */
inline i128 isqrt128(i128 x) {
    if (x < 0) throw std::invalid_argument("isqrt128: negative argument");
    if (x <= i128(INT64_MAX)) return isqrt64(static_cast<i64>(x));
    i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(static_cast<u128>(x))));
    while (r > 0 && r > x / r) --r;
    while (r + 1 <= x / (r + 1)) ++r;
    return r;
}

std::string to_string_i128(i128 v);
i128 parse_i128(const std::string& s);
double to_double_i128(i128 v);

}  // namespace hypvis
