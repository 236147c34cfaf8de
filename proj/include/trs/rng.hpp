#pragma once

#include <cstdint>
#include <random>

#include "trs/hash.hpp"

namespace trs {

// Seeded generator used everywhere randomness is needed; mt19937_64 has a
// fully specified sequence, so runs are reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

    // uniform in [0, 1)
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    Bytes bytes(std::size_t n) {
        Bytes out(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (i % 8 == 0) buf_ = next();
            out[i] = static_cast<std::uint8_t>(buf_ >> (8 * (i % 8)));
        }
        return out;
    }

private:
    std::mt19937_64 gen_;
    std::uint64_t buf_ = 0;
};

}  // namespace trs
