#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trs/contract.hpp"

#include "json.hpp"

namespace trs {

enum class BehaviorKind {
    honest,
    drop_at_hop,        // serve and submit, but never hand the package off
    skip_certificate,   // sender: no commitments; peer/recipient: no certificate
    skip_whisper_key,   // peer: no channel key for the successor
    release_ahead,      // leak the held recipient-only ciphertext to a target
};

enum class ReportPolicy { always, never };

// One participant's strategy for a run. At most one active misbehavior;
// verification participation and reporting are policies, not misbehaviors.
struct Behavior {
    BehaviorKind kind = BehaviorKind::honest;
    std::string release_target;
    TimePoint release_at = 0;
    bool verifies = true;
    ReportPolicy report = ReportPolicy::always;
    bool gains_value = true;  // a successful attack realizes the data value
};

struct ScenarioSpec {
    struct Participant {
        std::string name;
        Role role = Role::peer;
        Money balance;
        std::optional<TimeWindow> window;  // selection input for peers
    };

    std::vector<Participant> participants;
    bool run_service = true;
    Money value;
    PricingParams pricing;
    std::optional<std::vector<Money>> remuneration_override;
    std::optional<Money> deposit_override;
    std::map<std::string, Behavior> behaviors;
    std::int64_t transfer_hours = 1;
    std::uint64_t seed = 1;
    TimePoint setup_time = 0;
    TimePoint release_time = 0;
    // Ordered explicit route (owner + working window); when absent the route
    // comes from the selection algorithm over participant windows.
    std::optional<std::vector<std::pair<std::string, TimeWindow>>> explicit_route;
    std::string crypto = "test";

    static ScenarioSpec from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

struct RunResult {
    std::map<std::string, Money> finals;  // spendable + frozen after settlement
    std::string status = "NoService";
    std::string guilty;
    Money locked_pool_delta;
    std::vector<EventRecord> trace;
    std::vector<InflowRecord> inflows;
    std::set<std::string> served;  // peers that completed their handoff

    std::string report_text() const;  // deterministic key=value block
    std::vector<std::string> trace_lines() const;
};

// Advances logical time hour by hour, firing due behavior actions and
// automatic verifications at deadline boundaries, until the service settles.
// Pure function of the spec; throws SpecError on malformed input.
RunResult run_scenario(const ScenarioSpec& spec);

// Determinism audit: re-runs the spec and checks the produced event trace
// line by line against the recorded one. Throws TraceCorrupt on divergence.
RunResult replay_trace(const ScenarioSpec& spec, const std::vector<std::string>& recorded_trace);

struct ConditionCase {
    std::string name;
    ScenarioSpec spec;
    std::map<std::string, Money> expected_finals;
    Money expected_locked_delta;
};

// The five golden security-evaluation scenarios with their expected final
// balances: a baseline with no service, the honest run, a withheld whisper
// key, an early release with a reporter, and a handoff drop dispute.
std::vector<ConditionCase> condition_suite();

}  // namespace trs
