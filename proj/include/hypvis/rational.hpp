#pragma once

#include <compare>

#include "hypvis/int_ops.hpp"

namespace hypvis {

/**
 * Exact rational on 128-bit integers, always stored reduced with a positive
 * denominator.  Comparisons fall back to 256-bit arithmetic when the
 * cross-products would overflow, so they are exact for every representable
 * value.
 */
class Ratio {
  public:
    Ratio() : num_(0), den_(1) {}
    Ratio(i128 num, i128 den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("Ratio: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        i128 g = gcd128(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }
    static Ratio integer(i128 v) { return Ratio(v, 1); }

    i128 num() const { return num_; }
    i128 den() const { return den_; }

    bool operator==(const Ratio& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Ratio& o) const;
    bool operator<(const Ratio& o) const { return (*this <=> o) == std::strong_ordering::less; }
    bool operator<=(const Ratio& o) const { return (*this <=> o) != std::strong_ordering::greater; }
    bool operator>(const Ratio& o) const { return (*this <=> o) == std::strong_ordering::greater; }
    bool operator>=(const Ratio& o) const { return (*this <=> o) != std::strong_ordering::less; }

    Ratio operator+(const Ratio& o) const;
    Ratio operator-(const Ratio& o) const;
    Ratio operator*(const Ratio& o) const;

    double to_double() const { return to_double_i128(num_) / to_double_i128(den_); }
    std::string str() const;

    /** Nearest rational to a finite double, exact (mantissa over power of two). */
    static Ratio from_double(double v);

  private:
    i128 num_;
    i128 den_;
};

}  // namespace hypvis
