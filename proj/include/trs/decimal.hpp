#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "trs/money.hpp"

namespace trs {

// Signed decimal fixed-point number with 30 fractional digits on a 256-bit
// magnitude. All arithmetic is integer arithmetic, so results are identical
// across platforms and runs. Used for the value-multiplier exponentiation and
// anywhere a dimensionless factor multiplies money.
//
// Range: |value| < ~1.15e47 (magnitude < 2^256 / 10^30 scale). Enough for
// m^beta with m up to 1e9 and beta up to 4, which is validated upstream.
class Dec30 {
public:
    using Mag = std::array<std::uint64_t, 4>;  // little-endian limbs, value = mag / 10^30

    Dec30() : neg_(false), mag_{0, 0, 0, 0} {}

    static Dec30 from_int(std::int64_t v);
    // Interprets a count of micro-ETH as a value in ETH (units / 10^6).
    static Dec30 from_money(Money m);
    static Dec30 parse(std::string_view text);

    bool is_zero() const;
    bool is_negative() const { return neg_ && !is_zero(); }
    bool is_integer() const;

    Dec30 operator-() const;
    friend Dec30 operator+(const Dec30& a, const Dec30& b);
    friend Dec30 operator-(const Dec30& a, const Dec30& b);
    friend Dec30 operator*(const Dec30& a, const Dec30& b);  // truncates at 10^-30

    int compare(const Dec30& o) const;
    friend bool operator==(const Dec30& a, const Dec30& b) { return a.compare(b) == 0; }
    friend bool operator<(const Dec30& a, const Dec30& b) { return a.compare(b) < 0; }
    friend bool operator<=(const Dec30& a, const Dec30& b) { return a.compare(b) <= 0; }
    friend bool operator>(const Dec30& a, const Dec30& b) { return a.compare(b) > 0; }
    friend bool operator>=(const Dec30& a, const Dec30& b) { return a.compare(b) >= 0; }

    // Natural log of a positive integer, via ln m = k ln2 + 2 atanh(z) with
    // m / 2^k in [1,2). Integer-only series, 30-digit precision.
    static Dec30 ln_of_int(std::int64_t m);
    // e^x for x >= 0, by ln2 argument reduction plus Taylor series.
    Dec30 exp() const;
    // m^e for small non-negative integer exponents, exact until truncation.
    static Dec30 int_pow(std::int64_t m, unsigned e);
    // m^beta, dispatching to int_pow when beta is integral.
    static Dec30 pow_int_base(std::int64_t m, const Dec30& beta);

    // this * amount, rounded half-to-even to a micro-ETH base unit.
    Money scale_money(Money amount) const;

    // Fixed 30-fractional-digit rendering, e.g. "3.348369522101713303327842415131".
    std::string str() const;

    std::int64_t floor_int() const;

private:
    static Dec30 make(bool neg, const Mag& mag);
    static Dec30 reciprocal_small(const Dec30& d);  // 1/d for d in [1, 16)

    bool neg_;
    Mag mag_;
};

}  // namespace trs
