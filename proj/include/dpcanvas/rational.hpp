#pragma once

#include <boost/rational.hpp>

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "dpcanvas/error.hpp"

namespace dpcanvas {

using Rational = boost::rational<std::int64_t>;

/// Always `p/q` in lowest terms, including integers ("2/1").
inline std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Accepts `p/q` or a bare integer.
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
            throw InputError("malformed rational '" + std::string(text) + "'");
        return value;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    std::int64_t num = parse_int(text.substr(0, slash));
    std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

}  // namespace dpcanvas
