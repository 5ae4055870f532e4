#include "obddlab/fraction.hpp"

#include "obddlab/errors.hpp"

#include <cctype>
#include <cstdio>

namespace obddlab {

Fraction::Fraction(std::uint64_t num, std::uint64_t den) {
    if (den == 0)
        throw Error("fraction with zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    num_ = g ? num / g : 0;
    den_ = g ? den / g : 1;
}

Fraction Fraction::parseDecimal(const std::string& text) {
    std::uint64_t intPart = 0, fracPart = 0, scale = 1;
    std::size_t i = 0;
    bool digits = false;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
        intPart = intPart * 10 + static_cast<std::uint64_t>(text[i] - '0');
        digits = true;
    }
    if (i < text.size() && text[i] == '.') {
        for (++i; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            if (scale > 1'000'000'000'000ULL)
                throw Error("too many decimal places in '" + text + "'");
            fracPart = fracPart * 10 + static_cast<std::uint64_t>(text[i] - '0');
            scale *= 10;
            digits = true;
        }
    }
    if (i != text.size() || !digits)
        throw Error("not a non-negative decimal: '" + text + "'");
    return Fraction(intPart * scale + fracPart, scale);
}

std::string Fraction::toDecimal(int digits) const {
    std::uint64_t d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    const int places = std::max(twos, fives);
    if (d == 1 && places <= 18) {
        std::uint64_t scale = 1;
        for (int k = 0; k < places; ++k)
            scale *= 10;
        const unsigned __int128 scaled = static_cast<unsigned __int128>(num_) * scale / den_;
        const std::uint64_t whole = static_cast<std::uint64_t>(scaled / scale);
        const std::uint64_t rest = static_cast<std::uint64_t>(scaled % scale);
        std::string out = std::to_string(whole);
        if (places > 0) {
            std::string frac = std::to_string(rest);
            frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
            out += "." + frac;
        }
        return out;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, toDouble());
    return buf;
}

std::string Fraction::toString() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::uint64_t Fraction::roundTimes(std::uint64_t n) const {
    const unsigned __int128 twice = static_cast<unsigned __int128>(num_) * n * 2 + den_;
    return static_cast<std::uint64_t>(twice / (2 * static_cast<unsigned __int128>(den_)));
}

} // namespace obddlab
