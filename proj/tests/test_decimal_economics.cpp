#include "doctest.h"

#include <cmath>

#include "trs/decimal.hpp"
#include "trs/economics.hpp"
#include "trs/errors.hpp"
#include "trs/rng.hpp"

using namespace trs;

namespace {

// High-precision expected values frozen from an independent evaluation.
const char* kPow3_11 = "3.348369522101713303327842415131";
const char* kPow7_13 = "12.549529737646980598220200633200";
const char* kPow1000_11 = "1995.262314968879601352455396739535";
const char* kPow1e6_11 = "3981071.705534972507702523050877520434";

bool close_to(const Dec30& value, const char* expected, const char* tolerance) {
    Dec30 diff = value - Dec30::parse(expected);
    if (diff.is_negative()) diff = -diff;
    return diff < Dec30::parse(tolerance);
}

double approx(const Dec30& value) { return std::stod(value.str()); }

}  // namespace

TEST_CASE("decimal literals round-trip") {
    CHECK(Dec30::parse("1.1").str() == "1.100000000000000000000000000000");
    CHECK(Dec30::parse("-0.5").str() == "-0.500000000000000000000000000000");
    CHECK(Dec30::from_int(42).str() == "42.000000000000000000000000000000");
    CHECK(Dec30::parse("1.1") + Dec30::parse("2.9") == Dec30::from_int(4));
    CHECK(Dec30::parse("0.1") * Dec30::from_int(30) == Dec30::from_int(3));
    CHECK(Dec30::from_money(Money::parse_eth("0.000012")).str() ==
          "0.000012000000000000000000000000");
    CHECK(Dec30::parse("2").is_integer());
    CHECK(!Dec30::parse("2.5").is_integer());
}

TEST_CASE("deterministic exponentiation matches the high-precision oracle") {
    CHECK(close_to(Dec30::pow_int_base(3, Dec30::parse("1.1")), kPow3_11, "0.000000000000000000000001"));
    CHECK(close_to(Dec30::pow_int_base(7, Dec30::parse("1.3")), kPow7_13, "0.000000000000000000000001"));
    CHECK(close_to(Dec30::pow_int_base(1000, Dec30::parse("1.1")), kPow1000_11,
                   "0.000000000000000000001"));
    CHECK(close_to(Dec30::pow_int_base(1'000'000, Dec30::parse("1.1")), kPow1e6_11,
                   "0.000000000000001"));
    // integral exponents take the exact path
    CHECK(Dec30::pow_int_base(5, Dec30::parse("2")) == Dec30::from_int(25));
    CHECK(Dec30::pow_int_base(10, Dec30::parse("3")) == Dec30::from_int(1000));
    CHECK(Dec30::pow_int_base(1, Dec30::parse("1.7")) == Dec30::from_int(1));

    // long-double sweep: agreement to at least 12 significant digits
    for (std::int64_t m : {2, 3, 5, 17, 100, 999, 4096, 123456}) {
        for (const char* beta : {"1.05", "1.1", "1.5", "2.5", "3.9"}) {
            long double want = std::pow(static_cast<long double>(m),
                                        static_cast<long double>(std::stod(beta)));
            double got = approx(Dec30::pow_int_base(m, Dec30::parse(beta)));
            CHECK(std::abs(got - static_cast<double>(want)) <=
                  static_cast<double>(want) * 1e-12);
        }
    }
}

TEST_CASE("pow results are identical across repeated evaluation") {
    Dec30 a = Dec30::pow_int_base(12345, Dec30::parse("1.1"));
    Dec30 b = Dec30::pow_int_base(12345, Dec30::parse("1.1"));
    CHECK(a.str() == b.str());
}

TEST_CASE("value multiplier applies the ceiling quantization") {
    PricingParams p;
    CHECK(value_multiplier(Money::eth(1), p) == Dec30::from_int(1));  // v = delta_v
    CHECK(close_to(value_multiplier(Money::eth(3), p), kPow3_11, "0.000000000000000000001"));
    // 2.5 quanta round up to 3
    CHECK(value_multiplier(Money::parse_eth("2.5"), p).str() ==
          value_multiplier(Money::eth(3), p).str());
    CHECK_THROWS_AS(value_multiplier(Money{}, p), ParamViolation);
}

TEST_CASE("hour charges grow linearly and sum to the closed form") {
    PricingParams p;
    CHECK(hour_charge(1, p) == p.delta_r1);
    CHECK(hour_charge(2, p) == Money::parse_eth("0.000013"));
    CHECK_THROWS_AS(hour_charge(0, p), ParamViolation);

    for (std::int64_t n : {1, 2, 3, 10, 100, 1000, 100000}) {
        Money sum;
        for (std::int64_t i = 1; i <= n; ++i) sum += hour_charge(i, p);
        CHECK(sum == storage_charge(n, p));
    }
}

TEST_CASE("total remuneration for the unit cases") {
    PricingParams p;
    CHECK(total_remuneration(Money::eth(1), 1, 1, p) == p.r_c + p.delta_r1);
    CHECK(total_remuneration(Money::eth(1), 2, 2, p) ==
          2 * p.r_c + 2 * p.delta_r1 + p.alpha);
    CHECK_THROWS_AS(total_remuneration(Money::eth(1), 0, 1, p), ParamViolation);
    CHECK_THROWS_AS(total_remuneration(Money::eth(1), 1, 0, p), ParamViolation);
}

TEST_CASE("total remuneration is monotone in value, hours and peer count") {
    Rng rng(11);
    PricingParams p;
    for (int i = 0; i < 100; ++i) {
        Money v = Money::micro(1 + static_cast<std::int64_t>(rng.below(8'000'000)));
        auto hours = static_cast<std::int64_t>(1 + rng.below(2000));
        int peers = static_cast<int>(1 + rng.below(8));
        Money base = total_remuneration(v, hours, peers, p);
        CHECK(total_remuneration(v + Money::eth(1), hours, peers, p) >= base);
        CHECK(total_remuneration(v, hours + 10, peers, p) >= base);
        CHECK(total_remuneration(v, hours, peers + 1, p) >= base);
    }
}

TEST_CASE("per-peer payments partition the hour charges") {
    PricingParams p;
    SUBCASE("single hour") {
        CHECK(per_peer_payment(Money::eth(1), 1, 1, p) == p.r_c + p.delta_r1);
    }
    SUBCASE("two peers splitting two hours") {
        CHECK(per_peer_payment(Money::eth(1), 1, 1, p) == p.r_c + p.delta_r1);
        CHECK(per_peer_payment(Money::eth(1), 2, 2, p) == p.r_c + p.delta_r1 + p.alpha);
    }
    SUBCASE("random consecutive partitions cover the storage part") {
        Rng rng(5);
        for (int round = 0; round < 60; ++round) {
            Money v = Money::micro(1 + static_cast<std::int64_t>(rng.below(9'000'000)));
            auto n = static_cast<std::int64_t>(2 + rng.below(500));
            // cut [1..n] into consecutive ranges
            std::vector<std::int64_t> cuts{0};
            for (std::int64_t h = 1; h < n; ++h)
                if (rng.below(4) == 0) cuts.push_back(h);
            cuts.push_back(n);
            int k = static_cast<int>(cuts.size()) - 1;
            Money sum;
            for (int i = 0; i < k; ++i)
                sum += per_peer_payment(v, cuts[i] + 1, cuts[i + 1], p);
            Money total = total_remuneration(v, n, k, p);
            // each payment rounds once, so the partition may drift by at most
            // half a unit per peer in either direction
            std::int64_t drift = sum.units() - total.units();
            CHECK(std::abs(drift) <= (k + 1) / 2 + 1);
        }
    }
    SUBCASE("later hours always pay more per hour") {
        for (std::int64_t h = 1; h < 100; ++h)
            CHECK(per_peer_payment(Money::eth(3), h + 1, h + 1, p) >
                  per_peer_payment(Money::eth(3), h, h, p));
    }
}

TEST_CASE("the selectable closed form follows its printed coefficients") {
    PricingParams hour_sum;
    PricingParams closed = hour_sum;
    closed.per_peer_formula = PerPeerFormula::closed_form;
    // with v = delta_v the multiplier is 1; over hours [3..7] the hour sum
    // charges 5 hours, the closed form (j - i) = 4 plus the midpoint alpha
    Money a = per_peer_payment(Money::eth(1), 3, 7, hour_sum);
    Money b = per_peer_payment(Money::eth(1), 3, 7, closed);
    Money want_sum = hour_sum.r_c + 5 * hour_sum.delta_r1 + 20 * hour_sum.alpha;
    Money want_closed = closed.r_c + 4 * closed.delta_r1 + 4 * closed.alpha;
    CHECK(a == want_sum);
    CHECK(b == want_closed);
    CHECK(a != b);  // the two conventions genuinely disagree
}

TEST_CASE("deposit and award scale with the data value") {
    PricingParams p;
    CHECK(required_deposit(Money::eth(3), p) == Money::parse_eth("3.6"));
    CHECK(report_award(Money::eth(3), p) == Money::parse_eth("0.3"));
    CHECK(required_deposit(Money::eth(1), p) == Money::parse_eth("1.2"));
    CHECK(report_award(Money::eth(1), p) == Money::parse_eth("0.1"));

    PricingParams bad = p;
    bad.deposit_factor_millionths = 1'050'000;  // 1.05 < 1 + 0.1
    CHECK_THROWS_AS(required_deposit(Money::eth(1), bad), ParamViolation);
    CHECK_THROWS_AS(bad.validate(), ParamViolation);
}

TEST_CASE("pricing params serialize through json") {
    PricingParams p;
    p.alpha = Money::parse_eth("0.000012");
    auto j = p.to_json();
    PricingParams q = PricingParams::from_json(j);
    CHECK(q.alpha == p.alpha);
    CHECK(q.beta == p.beta);
    CHECK(q.deposit_factor_millionths == p.deposit_factor_millionths);
    CHECK(q.per_peer_formula == p.per_peer_formula);

    nlohmann::json bad{{"per_peer_formula", "imaginary"}};
    CHECK_THROWS_AS(PricingParams::from_json(bad), ParamViolation);
}
