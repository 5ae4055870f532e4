#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace obddlab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact non-negative rational num/den kept in lowest terms.
///
/// Used for every threshold comparison (theta against 2/3, clause density
/// delta) so that no decision depends on floating-point rounding.
class Fraction {
public:
    constexpr Fraction() = default;
    Fraction(std::uint64_t num, std::uint64_t den);

    static Fraction parseDecimal(const std::string& text);

    std::uint64_t num() const noexcept { return num_; }
    std::uint64_t den() const noexcept { return den_; }
    double toDouble() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Exact decimal when den has only factors 2 and 5, otherwise rounded to
    // `digits` places.
    std::string toDecimal(int digits = 6) const;
    std::string toString() const;

    // round(value * n), ties up.
    std::uint64_t roundTimes(std::uint64_t n) const;

    friend bool operator==(const Fraction& a, const Fraction& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) noexcept {
        using u128 = unsigned __int128;
        return static_cast<u128>(a.num_) * b.den_ <=> static_cast<u128>(b.num_) * a.den_;
    }

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

} // namespace obddlab
