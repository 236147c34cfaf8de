#include "trs/money.hpp"

#include <cctype>
#include <cstdlib>

namespace trs {

Money Money::parse_eth(std::string_view text) {
    if (text.empty()) throw Error("empty money literal");
    bool neg = false;
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
        neg = text[0] == '-';
        i = 1;
    }
    std::int64_t whole = 0;
    bool any_digit = false;
    for (; i < text.size() && text[i] != '.'; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw Error("bad money literal: " + std::string(text));
        whole = whole * 10 + (text[i] - '0');
        any_digit = true;
    }
    std::int64_t frac = 0;
    int frac_digits = 0;
    if (i < text.size()) {  // consume '.'
        for (++i; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw Error("bad money literal: " + std::string(text));
            if (++frac_digits > 6)
                throw Error("money literal finer than micro-ETH: " + std::string(text));
            frac = frac * 10 + (text[i] - '0');
            any_digit = true;
        }
    }
    if (!any_digit) throw Error("bad money literal: " + std::string(text));
    for (int d = frac_digits; d < 6; ++d) frac *= 10;
    std::int64_t units = whole * kUnitsPerEth + frac;
    return Money::micro(neg ? -units : units);
}

std::string Money::to_eth() const {
    std::int64_t u = units_;
    std::string sign;
    if (u < 0) {
        sign = "-";
        u = -u;
    }
    std::string whole = std::to_string(u / kUnitsPerEth);
    std::string frac = std::to_string(u % kUnitsPerEth);
    frac.insert(frac.begin(), 6 - frac.size(), '0');
    return sign + whole + "." + frac;
}

Money scale_by_millionths(Money amount, std::int64_t factor_millionths) {
    using Wide = __int128;
    Wide p = static_cast<Wide>(amount.units()) * factor_millionths;
    bool neg = p < 0;
    if (neg) p = -p;
    Wide q = p / Money::kUnitsPerEth;
    Wide r = p % Money::kUnitsPerEth;
    Wide twice = r * 2;
    if (twice > Money::kUnitsPerEth || (twice == Money::kUnitsPerEth && (q & 1)))
        ++q;
    auto units = static_cast<std::int64_t>(q);
    return Money::micro(neg ? -units : units);
}

}  // namespace trs
