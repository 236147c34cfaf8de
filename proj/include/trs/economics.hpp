#pragma once

#include <cstdint>
#include <string>

#include "trs/decimal.hpp"
#include "trs/money.hpp"

#include "json.hpp"

namespace trs {

enum class PerPeerFormula {
    hour_sum,     // canonical: per-hour charges summed over the served range
    closed_form,  // printed closed form with the (j - i) hour factor
};

// Remuneration and deposit parameters for one service.
//
// A service of monetary value v, storage length |Ts| hours and k peers costs
//   r_hat = ceil(v / delta_v)^beta * [k*r_c + |Ts|*delta_r1 + |Ts|(|Ts|-1)/2 * alpha]
// and charges grow per storage hour: hour i costs delta_r1 + (i-1)*alpha, so
// hours close to the release time pay more than early ones.
//
// Deposits and awards scale with v: d_s = deposit_factor * v and
// a = award_factor * v. The factors must keep d_s > v and d_s > v + a or the
// deterrence guarantees of the enforcement and reporting games are void.
struct PricingParams {
    Money alpha = Money::parse_eth("0.000012");
    Dec30 beta = Dec30::parse("1.1");
    Money delta_r1 = Money::parse_eth("0.000001");
    Money delta_v = Money::eth(1);
    Money r_c = Money::parse_eth("0.002");
    std::int64_t deposit_factor_millionths = 1'200'000;  // 1.2
    std::int64_t award_factor_millionths = 100'000;      // 0.1
    PerPeerFormula per_peer_formula = PerPeerFormula::hour_sum;

    void validate() const;  // throws ParamViolation

    static PricingParams from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

// ceil(v / delta_v)^beta as an exact 30-digit decimal.
Dec30 value_multiplier(Money v, const PricingParams& p);

// Charge of the i-th storage hour (i >= 1), before the value multiplier.
Money hour_charge(std::int64_t i, const PricingParams& p);

// Sum of hour charges over [1, hours], closed form.
Money storage_charge(std::int64_t hours, const PricingParams& p);

// Total remuneration r_hat for the whole service, rounded half-to-even once.
Money total_remuneration(Money v, std::int64_t storage_hours, int peer_count,
                         const PricingParams& p);

// Payment for one peer serving storage hours [first, last] (1-based,
// inclusive) of the service. A single terminal rounding per payment.
Money per_peer_payment(Money v, std::int64_t first_hour, std::int64_t last_hour,
                       const PricingParams& p);

Money required_deposit(Money v, const PricingParams& p);
Money report_award(Money v, const PricingParams& p);

}  // namespace trs
