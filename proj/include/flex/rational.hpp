#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace flex {

using Rational = boost::rational<std::int64_t>;

// "p/q" in lowest terms, or "p" when q = 1.
std::string format_rational(const Rational& r);

// Non-negative decimal ("3", "0.25", "1/6" also accepted). Throws
// std::invalid_argument on anything else.
Rational parse_nonneg_rational(std::string_view text);

}  // namespace flex
