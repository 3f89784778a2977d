#include "hypvis/parse.hpp"

#include <regex>
#include <stdexcept>

namespace hypvis {

namespace {

i64 to_i64(const std::string& digits, const std::string& what) {
    try {
        return std::stoll(digits);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument(what + " out of range: " + digits);
    }
}

}  // namespace

OrbitPoint parse_point(const std::string& text) {
    static const std::regex with_i(R"(^\s*\(\s*([+-]?\d+)\s*\+\s*i\s*\)\s*/\s*(\d+)\s*$)");
    static const std::regex plain(R"(^\s*([+-]?\d+)\s*/\s*(\d+)\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, with_i) && !std::regex_match(text, m, plain))
        throw std::invalid_argument("malformed point syntax (expected \"(B+i)/D\" or \"B/D\"): " +
                                    text);
    return OrbitPoint(to_i64(m[1], "numerator"), to_i64(m[2], "denominator"));
}

Ratio parse_decimal_ratio(const std::string& text) {
    static const std::regex decimal(R"(^\s*(\d*)(?:\.(\d+))?\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, decimal) || (m[1].str().empty() && m[2].str().empty()))
        throw std::invalid_argument("malformed decimal: " + text);
    const std::string whole = m[1].str().empty() ? "0" : m[1].str();
    const std::string frac = m[2].str();
    if (whole.size() + frac.size() > 30) throw std::invalid_argument("decimal too long: " + text);
    i128 num = parse_i128(whole + frac);
    i128 den = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
    return Ratio(num, den);
}

}  // namespace hypvis
