#pragma once

#include <cstdint>
#include <string>

#include "trs/errors.hpp"

namespace trs {

// Logical time is an integer hour index. Ordering of events inside one hour
// is handled by an integer sub-tick, never by fractional hours.
using TimePoint = std::int64_t;

// Half-open interval [begin, end) of hours.
struct TimeWindow {
    TimePoint begin = 0;
    TimePoint end = 0;

    constexpr std::int64_t length() const { return end - begin; }
    constexpr bool contains(TimePoint t) const { return begin <= t && t < end; }
    constexpr bool valid() const { return begin < end; }

    void require_valid() const {
        if (!valid()) throw Error("time window [" + std::to_string(begin) + "," +
                                  std::to_string(end) + ") is empty or reversed");
    }

    friend constexpr bool operator==(TimeWindow, TimeWindow) = default;
};

}  // namespace trs
