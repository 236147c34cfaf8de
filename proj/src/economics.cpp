#include "trs/economics.hpp"

#include "trs/errors.hpp"

namespace trs {

void PricingParams::validate() const {
    if (alpha <= Money{}) throw ParamViolation("alpha must be positive");
    if (delta_r1 <= Money{}) throw ParamViolation("delta_r1 must be positive");
    if (delta_v <= Money{}) throw ParamViolation("delta_v must be positive");
    if (r_c <= Money{}) throw ParamViolation("r_c must be positive");
    if (beta <= Dec30::from_int(1)) throw ParamViolation("beta must exceed 1");
    if (beta > Dec30::from_int(4)) throw ParamViolation("beta above 4 is out of range");
    if (deposit_factor_millionths <= 1'000'000)
        throw ParamViolation("deposit factor must exceed 1 (deposit must exceed data value)");
    if (award_factor_millionths <= 0) throw ParamViolation("award factor must be positive");
    if (deposit_factor_millionths <= 1'000'000 + award_factor_millionths)
        throw ParamViolation("deposit factor must exceed 1 + award factor "
                             "(deposit must exceed data value plus award)");
}

namespace {

const char* formula_name(PerPeerFormula f) {
    return f == PerPeerFormula::hour_sum ? "hour_sum" : "closed_form";
}

std::int64_t parse_factor(const nlohmann::json& j, const char* key, std::int64_t dflt) {
    if (!j.contains(key)) return dflt;
    return Money::parse_eth(j.at(key).get<std::string>()).units();
}

}  // namespace

PricingParams PricingParams::from_json(const nlohmann::json& j) {
    PricingParams p;
    if (j.contains("alpha")) p.alpha = Money::parse_eth(j.at("alpha").get<std::string>());
    if (j.contains("beta")) p.beta = Dec30::parse(j.at("beta").get<std::string>());
    if (j.contains("delta_r1")) p.delta_r1 = Money::parse_eth(j.at("delta_r1").get<std::string>());
    if (j.contains("delta_v")) p.delta_v = Money::parse_eth(j.at("delta_v").get<std::string>());
    if (j.contains("r_c")) p.r_c = Money::parse_eth(j.at("r_c").get<std::string>());
    p.deposit_factor_millionths = parse_factor(j, "deposit_factor", p.deposit_factor_millionths);
    p.award_factor_millionths = parse_factor(j, "award_factor", p.award_factor_millionths);
    if (j.contains("per_peer_formula")) {
        auto name = j.at("per_peer_formula").get<std::string>();
        if (name == "hour_sum") p.per_peer_formula = PerPeerFormula::hour_sum;
        else if (name == "closed_form") p.per_peer_formula = PerPeerFormula::closed_form;
        else throw ParamViolation("unknown per_peer_formula: " + name);
    }
    p.validate();
    return p;
}

nlohmann::json PricingParams::to_json() const {
    return nlohmann::json{
        {"alpha", alpha.to_eth()},
        {"beta", beta.str()},
        {"delta_r1", delta_r1.to_eth()},
        {"delta_v", delta_v.to_eth()},
        {"r_c", r_c.to_eth()},
        {"deposit_factor", Money::micro(deposit_factor_millionths).to_eth()},
        {"award_factor", Money::micro(award_factor_millionths).to_eth()},
        {"per_peer_formula", formula_name(per_peer_formula)},
    };
}

Dec30 value_multiplier(Money v, const PricingParams& p) {
    if (v <= Money{}) throw ParamViolation("data value must be positive");
    std::int64_t m = (v.units() + p.delta_v.units() - 1) / p.delta_v.units();  // ceil
    if (m < 1) m = 1;
    if (m > 1'000'000'000) throw ParamViolation("value quantum count out of range");
    return Dec30::pow_int_base(m, p.beta);
}

Money hour_charge(std::int64_t i, const PricingParams& p) {
    if (i < 1) throw ParamViolation("hour index starts at 1");
    return p.delta_r1 + (i - 1) * p.alpha;
}

Money storage_charge(std::int64_t hours, const PricingParams& p) {
    if (hours < 0) throw ParamViolation("negative storage length");
    return hours * p.delta_r1 + (hours * (hours - 1) / 2) * p.alpha;
}

Money total_remuneration(Money v, std::int64_t storage_hours, int peer_count,
                         const PricingParams& p) {
    if (storage_hours < 1) throw ParamViolation("storage must last at least one hour");
    if (peer_count < 1) throw ParamViolation("at least one peer required");
    Money base = peer_count * p.r_c + storage_charge(storage_hours, p);
    return value_multiplier(v, p).scale_money(base);
}

Money per_peer_payment(Money v, std::int64_t first_hour, std::int64_t last_hour,
                       const PricingParams& p) {
    if (first_hour < 1 || last_hour < first_hour)
        throw ParamViolation("bad served hour range");
    if (p.per_peer_formula == PerPeerFormula::hour_sum) {
        // r_c + sum of hour charges over [first, last]; the sum telescopes to
        // a closed form so large ranges stay O(1). n*(first+last-2) is always
        // even, so the division is exact.
        std::int64_t n = last_hour - first_hour + 1;
        Money base = p.r_c + n * p.delta_r1 + (n * (first_hour + last_hour - 2) / 2) * p.alpha;
        return value_multiplier(v, p).scale_money(base);
    }
    // (j - i) hour factor as printed; kept selectable because it does not
    // partition the total across consecutive ranges. The (i + j - 2)/2 term
    // can be a half unit, so it stays in decimal until the terminal rounding.
    static const Dec30 half = Dec30::parse("0.5");
    std::int64_t n = last_hour - first_hour;
    Dec30 charges = Dec30::from_money(p.r_c + n * p.delta_r1) +
                    Dec30::from_money(p.alpha) * half * Dec30::from_int(first_hour + last_hour - 2);
    return (value_multiplier(v, p) * charges).scale_money(Money::eth(1));
}

Money required_deposit(Money v, const PricingParams& p) {
    if (v <= Money{}) throw ParamViolation("data value must be positive");
    p.validate();
    return scale_by_millionths(v, p.deposit_factor_millionths);
}

Money report_award(Money v, const PricingParams& p) {
    if (v <= Money{}) throw ParamViolation("data value must be positive");
    p.validate();
    return scale_by_millionths(v, p.award_factor_millionths);
}

}  // namespace trs
