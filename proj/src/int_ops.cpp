#include "hypvis/int_ops.hpp"

#include <algorithm>

namespace hypvis {

std::string to_string_i128(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 u = neg ? u128(0) - u128(v) : u128(v);
    std::string out;
    while (u > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

i128 parse_i128(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_i128: empty string");
    std::size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = s[pos] == '-';
        ++pos;
    }
    if (pos == s.size()) throw std::invalid_argument("parse_i128: no digits");
    i128 v = 0;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c < '0' || c > '9') throw std::invalid_argument("parse_i128: bad digit");
        v = mul128(v, 10);
        v = add128(v, c - '0');
    }
    return neg ? -v : v;
}

double to_double_i128(i128 v) {
    return static_cast<double>(v);
}

}  // namespace hypvis
