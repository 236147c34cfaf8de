#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>

#include "trs/errors.hpp"

namespace trs {

// Monetary amount as an exact count of micro-ETH base units (1 ETH = 10^6).
// Signed so that payoff deltas can be negative; ledger balances enforce
// non-negativity at the operation level.
class Money {
public:
    static constexpr std::int64_t kUnitsPerEth = 1'000'000;

    constexpr Money() = default;

    static constexpr Money micro(std::int64_t units) { return Money(units); }
    static constexpr Money eth(std::int64_t whole) { return Money(whole * kUnitsPerEth); }

    // Parses a fixed-point ETH string such as "3.6", "-0.128" or "5".
    // More than six fractional digits is an error: the base unit is the
    // coarsest exact representation this ledger supports.
    static Money parse_eth(std::string_view text);

    constexpr std::int64_t units() const { return units_; }

    // Renders as ETH with exactly six decimals, e.g. "3.600000".
    std::string to_eth() const;

    constexpr bool is_zero() const { return units_ == 0; }
    constexpr bool is_negative() const { return units_ < 0; }

    friend constexpr Money operator+(Money a, Money b) { return Money(a.units_ + b.units_); }
    friend constexpr Money operator-(Money a, Money b) { return Money(a.units_ - b.units_); }
    constexpr Money operator-() const { return Money(-units_); }
    constexpr Money& operator+=(Money o) { units_ += o.units_; return *this; }
    constexpr Money& operator-=(Money o) { units_ -= o.units_; return *this; }
    friend constexpr Money operator*(Money a, std::int64_t k) { return Money(a.units_ * k); }
    friend constexpr Money operator*(std::int64_t k, Money a) { return a * k; }

    friend constexpr auto operator<=>(Money, Money) = default;

private:
    constexpr explicit Money(std::int64_t units) : units_(units) {}
    std::int64_t units_ = 0;
};

// Multiplies an amount by a factor expressed in millionths (e.g. a deposit
// factor of 1.2 is 1'200'000) and rounds half-to-even to a base unit.
Money scale_by_millionths(Money amount, std::int64_t factor_millionths);

}  // namespace trs
