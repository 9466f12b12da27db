#include "flex/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace flex {

std::string format_rational(const Rational& r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_digits(std::string_view s, std::string_view whole)
{
    if (s.empty() || s.size() > 15)
        throw std::invalid_argument("bad number '" + std::string(whole) + "'");
    std::int64_t v = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("bad number '" + std::string(whole) + "'");
        v = v * 10 + (ch - '0');
    }
    return v;
}

}  // namespace

Rational parse_nonneg_rational(std::string_view text)
{
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const std::int64_t den = parse_digits(text.substr(slash + 1), text);
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(parse_digits(text.substr(0, slash), text), den);
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos)
        return Rational(parse_digits(text, text));
    const std::string_view ip = text.substr(0, dot), fp = text.substr(dot + 1);
    const std::int64_t whole = ip.empty() ? 0 : parse_digits(ip, text);
    if (fp.empty())
        return Rational(whole);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i)
        scale *= 10;
    if (ip.size() + fp.size() > 15)
        throw std::invalid_argument("too many digits in '" + std::string(text) + "'");
    return Rational(whole) + Rational(parse_digits(fp, text), scale);
}

}  // namespace flex
