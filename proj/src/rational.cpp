#include "hypvis/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace hypvis {

namespace {
using boost::multiprecision::int256_t;

int256_t wide(i128 v) { return int256_t(v); }
}  // namespace

std::strong_ordering Ratio::operator<=>(const Ratio& o) const {
    // Denominators are positive, so the cross-products order the values.
    int256_t lhs = wide(num_) * wide(o.den_);
    int256_t rhs = wide(o.num_) * wide(den_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Ratio Ratio::operator+(const Ratio& o) const {
    i128 g = gcd128(den_, o.den_);
    i128 dl = den_ / g;
    i128 dr = o.den_ / g;
    i128 n = add128(mul128(num_, dr), mul128(o.num_, dl));
    return Ratio(n, mul128(dl, o.den_));
}

Ratio Ratio::operator-(const Ratio& o) const {
    return *this + Ratio(-o.num_, o.den_);
}

Ratio Ratio::operator*(const Ratio& o) const {
    // Cross-reduce before multiplying to keep intermediates small.
    i128 g1 = gcd128(num_, o.den_);
    i128 g2 = gcd128(o.num_, den_);
    return Ratio(mul128(num_ / g1, o.num_ / g2), mul128(den_ / g2, o.den_ / g1));
}

std::string Ratio::str() const {
    if (den_ == 1) return to_string_i128(num_);
    return to_string_i128(num_) + "/" + to_string_i128(den_);
}

Ratio Ratio::from_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("Ratio::from_double: not finite");
    int exp = 0;
    double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [0.5, 1)
    i128 num = static_cast<i128>(std::ldexp(mant, 62));
    exp -= 62;
    while (num != 0 && num % 2 == 0 && exp < 0) {
        num /= 2;
        ++exp;
    }
    i128 den = 1;
    while (exp > 0) {
        num = mul128(num, 2);
        --exp;
    }
    while (exp < 0) {
        den = mul128(den, 2);
        ++exp;
    }
    return Ratio(num, den);
}

}  // namespace hypvis
