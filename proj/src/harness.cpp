#include "trs/harness.hpp"

#include <algorithm>
#include <sstream>

#include "trs/errors.hpp"
#include "trs/onion.hpp"
#include "trs/rng.hpp"

namespace trs {
namespace {

Role role_from_name(const std::string& name) {
    if (name == "sender") return Role::sender;
    if (name == "recipient") return Role::recipient;
    if (name == "peer") return Role::peer;
    if (name == "external") return Role::external;
    throw SpecError("unknown role: " + name);
}

BehaviorKind behavior_from_name(const std::string& name) {
    if (name == "honest") return BehaviorKind::honest;
    if (name == "drop") return BehaviorKind::drop_at_hop;
    if (name == "skip_certificate") return BehaviorKind::skip_certificate;
    if (name == "skip_whisper_key") return BehaviorKind::skip_whisper_key;
    if (name == "release_ahead") return BehaviorKind::release_ahead;
    if (name == "skip_verification") return BehaviorKind::honest;  // verification flag only
    throw SpecError("unknown behavior: " + name);
}

const char* behavior_name(BehaviorKind k) {
    switch (k) {
        case BehaviorKind::honest: return "honest";
        case BehaviorKind::drop_at_hop: return "drop";
        case BehaviorKind::skip_certificate: return "skip_certificate";
        case BehaviorKind::skip_whisper_key: return "skip_whisper_key";
        case BehaviorKind::release_ahead: return "release_ahead";
    }
    return "?";
}

}  // namespace

ScenarioSpec ScenarioSpec::from_json(const nlohmann::json& j) {
    ScenarioSpec spec;
    try {
        for (const auto& pj : j.at("participants")) {
            Participant p;
            p.name = pj.at("name").get<std::string>();
            p.role = role_from_name(pj.at("role").get<std::string>());
            p.balance = Money::parse_eth(pj.at("balance_eth").get<std::string>());
            if (pj.contains("window"))
                p.window = TimeWindow{pj.at("window").at(0).get<std::int64_t>(),
                                      pj.at("window").at(1).get<std::int64_t>()};
            spec.participants.push_back(std::move(p));
        }
        if (j.contains("run_service")) spec.run_service = j.at("run_service").get<bool>();
        if (j.contains("v_eth")) spec.value = Money::parse_eth(j.at("v_eth").get<std::string>());
        if (j.contains("pricing")) spec.pricing = PricingParams::from_json(j.at("pricing"));
        if (j.contains("remuneration_override")) {
            std::vector<Money> ov;
            for (const auto& x : j.at("remuneration_override"))
                ov.push_back(Money::parse_eth(x.get<std::string>()));
            spec.remuneration_override = std::move(ov);
        }
        if (j.contains("deposit_override"))
            spec.deposit_override = Money::parse_eth(j.at("deposit_override").get<std::string>());
        if (j.contains("behaviors")) {
            for (const auto& [who, bj] : j.at("behaviors").items()) {
                Behavior b;
                if (bj.contains("action")) {
                    auto action = bj.at("action").get<std::string>();
                    b.kind = behavior_from_name(action);
                    if (action == "skip_verification") b.verifies = false;
                }
                if (bj.contains("target")) b.release_target = bj.at("target").get<std::string>();
                if (bj.contains("time")) b.release_at = bj.at("time").get<std::int64_t>();
                if (bj.contains("verifies")) b.verifies = bj.at("verifies").get<bool>();
                if (bj.contains("gains_value")) b.gains_value = bj.at("gains_value").get<bool>();
                if (bj.contains("report"))
                    b.report = bj.at("report").get<std::string>() == "never" ? ReportPolicy::never
                                                                             : ReportPolicy::always;
                spec.behaviors[who] = std::move(b);
            }
        }
        if (j.contains("transfer_hours"))
            spec.transfer_hours = j.at("transfer_hours").get<std::int64_t>();
        if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("setup_time")) spec.setup_time = j.at("setup_time").get<std::int64_t>();
        if (j.contains("release_time")) spec.release_time = j.at("release_time").get<std::int64_t>();
        if (j.contains("route")) {
            std::vector<std::pair<std::string, TimeWindow>> route;
            for (const auto& rj : j.at("route"))
                route.emplace_back(rj.at("peer").get<std::string>(),
                                   TimeWindow{rj.at("window").at(0).get<std::int64_t>(),
                                              rj.at("window").at(1).get<std::int64_t>()});
            spec.explicit_route = std::move(route);
        }
        if (j.contains("crypto")) spec.crypto = j.at("crypto").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw SpecError(std::string("bad scenario config: ") + e.what());
    }
    return spec;
}

nlohmann::json ScenarioSpec::to_json() const {
    nlohmann::json j;
    for (const auto& p : participants) {
        nlohmann::json pj{{"name", p.name},
                          {"role", role_name(p.role)},
                          {"balance_eth", p.balance.to_eth()}};
        if (p.window) pj["window"] = {p.window->begin, p.window->end};
        j["participants"].push_back(std::move(pj));
    }
    j["run_service"] = run_service;
    j["v_eth"] = value.to_eth();
    j["pricing"] = pricing.to_json();
    if (remuneration_override) {
        nlohmann::json ov = nlohmann::json::array();
        for (const auto& m : *remuneration_override) ov.push_back(m.to_eth());
        j["remuneration_override"] = std::move(ov);
    }
    for (const auto& [who, b] : behaviors) {
        nlohmann::json bj{{"action", behavior_name(b.kind)}};
        if (!b.release_target.empty()) bj["target"] = b.release_target;
        if (b.release_at) bj["time"] = b.release_at;
        bj["verifies"] = b.verifies;
        bj["gains_value"] = b.gains_value;
        bj["report"] = b.report == ReportPolicy::never ? "never" : "always";
        j["behaviors"][who] = std::move(bj);
    }
    j["transfer_hours"] = transfer_hours;
    j["seed"] = seed;
    j["setup_time"] = setup_time;
    j["release_time"] = release_time;
    if (explicit_route) {
        for (const auto& [peer, w] : *explicit_route)
            j["route"].push_back({{"peer", peer}, {"window", {w.begin, w.end}}});
    }
    j["crypto"] = crypto;
    return j;
}

std::string RunResult::report_text() const {
    std::ostringstream os;
    os << "status=" << status << '\n';
    os << "guilty=" << (guilty.empty() ? "-" : guilty) << '\n';
    os << "locked_pool_delta=" << locked_pool_delta.to_eth() << '\n';
    for (const auto& [name, amount] : finals)
        os << "final." << name << '=' << amount.to_eth() << '\n';
    int i = 0;
    for (const auto& rec : inflows)
        os << "inflow." << ++i << '=' << rec.account << ':' << rec.amount.to_eth() << ':'
           << rec.reason << '\n';
    return os.str();
}

std::vector<std::string> RunResult::trace_lines() const {
    std::vector<std::string> out;
    out.reserve(trace.size());
    for (const auto& e : trace) out.push_back(e.to_line());
    return out;
}

// ---------------------------------------------------------------------------
// scenario runtime

namespace {

struct Runtime {
    const ScenarioSpec& spec;
    CryptoSuite suite;
    Rng rng;
    Contract contract;
    WhisperBus bus;
    int sid = -1;

    TimePoint hour = 0;
    int sub = 0;

    std::map<std::string, KeyPair> keys;
    std::map<std::string, Behavior> behaviors;

    std::vector<std::string> hop_owner;   // positions 1..k
    std::vector<TimePoint> arrival_hour;  // per position 1..k+1
    std::string sender, recipient;

    OnionBuildResult onion;
    bool onion_built = false;
    std::map<std::string, OnionPackage> inner_held;
    std::map<std::string, Bytes> secret_key_held;
    std::set<std::string> has_package;
    std::map<int, Bytes> channel_key;  // edge from position j to j+1
    std::set<std::string> served;
    std::vector<std::pair<std::string, Bytes>> pending_evidence;  // holder, ciphertext
    std::set<std::string> leaked;  // release-ahead attackers already credited

    Runtime(const ScenarioSpec& s, Ledger ledger)
        : spec(s),
          suite(CryptoSuite::named(s.crypto)),
          rng(s.seed),
          contract(std::move(ledger), suite) {}

    CallCtx ctx(const std::string& caller) { return CallCtx{hour, sub++, caller}; }

    const Behavior& behavior(const std::string& name) const {
        static const Behavior honest{};
        auto it = behaviors.find(name);
        return it == behaviors.end() ? honest : it->second;
    }

    const Service& service() const { return contract.service(sid); }
    bool active() const { return sid >= 0 && service().status == ServiceStatus::active; }

    int hops() const { return static_cast<int>(hop_owner.size()); }

    std::string party(int pos) const {
        if (pos == 0) return sender;
        return pos <= hops() ? hop_owner[static_cast<std::size_t>(pos - 1)] : recipient;
    }
};

void deliver(Runtime& rt, int pos, const OnionPackage& package);

// Hands the package from position `from_pos` to its successor over the
// whisper channel keyed at setup (sender) or by the hop's submitted key.
void attempt_handoff(Runtime& rt, int from_pos) {
    if (!rt.active()) return;
    const std::string holder = rt.party(from_pos);
    const Behavior& b = rt.behavior(holder);
    auto key = rt.channel_key.find(from_pos);
    if (key == rt.channel_key.end()) return;  // no channel without the whisper key
    if (b.kind == BehaviorKind::drop_at_hop) return;
    if (from_pos == 0) {
        if (!rt.onion_built) return;
        rt.bus.post(key->second,
                    WhisperMessage{holder, rt.party(1), rt.onion.package.blob, rt.hour});
    } else {
        auto held = rt.inner_held.find(holder);
        if (held == rt.inner_held.end()) return;
        rt.bus.post(key->second,
                    WhisperMessage{holder, rt.party(from_pos + 1), held->second.blob, rt.hour});
    }
    auto msg = rt.bus.poll(key->second);
    if (!msg) return;
    rt.served.insert(holder);
    deliver(rt, from_pos + 1, OnionPackage{std::move(msg->payload)});
}

void deliver(Runtime& rt, int pos, const OnionPackage& package) {
    const std::string name = rt.party(pos);
    const Behavior& b = rt.behavior(name);
    rt.has_package.insert(name);

    PeelResult peeled = peel(rt.suite, package, rt.keys[name].private_key);
    if (peeled.package) rt.inner_held[name] = *peeled.package;
    if (peeled.secret_key) rt.secret_key_held[name] = *peeled.secret_key;

    if (b.kind != BehaviorKind::skip_certificate)
        rt.contract.verify_cert(rt.ctx(name), rt.sid, pos, peeled.certificate.nonce);
    if (pos <= rt.hops() && b.kind != BehaviorKind::skip_whisper_key) {
        Bytes key = rt.rng.bytes(16);
        WhisperEnvelope env =
            seal_channel_key(rt.suite, rt.keys[rt.party(pos + 1)].public_key, key, rt.rng);
        rt.contract.set_whisper_key(rt.ctx(name), rt.sid, pos, std::move(env));
        rt.channel_key[pos] = std::move(key);
    }
    if (b.verifies && rt.active()) rt.contract.verification(rt.ctx(name), rt.sid);
}

// A rational party only opens a dispute when every on-chain submission of its
// predecessors looks clean: a visible violation is the contract's to punish,
// and reporting it as a dispute would slash the reporter too.
bool predecessors_clean(const Runtime& rt, int pos) {
    const Service& s = rt.service();
    if (!s.commitments_set) return false;
    for (int i = 1; i < pos && i <= rt.hops(); ++i) {
        const auto& c = s.cert[static_cast<std::size_t>(i - 1)];
        if (!c.present || !c.matched) return false;
        const auto& w = s.whisper[static_cast<std::size_t>(i - 1)];
        if (!w.present) return false;
    }
    return true;
}

void validate_spec(const ScenarioSpec& spec) {
    if (spec.participants.empty()) throw SpecError("no participants");
    std::set<std::string> names;
    for (const auto& p : spec.participants)
        if (!names.insert(p.name).second) throw SpecError("duplicate participant " + p.name);
    for (const auto& [who, b] : spec.behaviors) {
        if (!names.count(who)) throw SpecError("behavior for unknown participant " + who);
        if (b.kind == BehaviorKind::release_ahead && !names.count(b.release_target))
            throw SpecError("release target unknown: " + b.release_target);
    }
    if (!spec.run_service) return;
    int senders = 0, recipients = 0;
    for (const auto& p : spec.participants) {
        senders += p.role == Role::sender;
        recipients += p.role == Role::recipient;
    }
    if (senders != 1 || recipients != 1)
        throw SpecError("a service needs exactly one sender and one recipient");
    if (spec.value.is_negative()) throw SpecError("data value cannot be negative");
    if (spec.value.is_zero() && !spec.deposit_override)
        throw SpecError("a zero-value service needs an explicit deposit");
    if (spec.setup_time >= spec.release_time) throw SpecError("release must follow setup");
    if (spec.transfer_hours < 1) throw SpecError("transfer_hours must be at least 1");
    if (spec.explicit_route) {
        for (const auto& [peer, w] : *spec.explicit_route) {
            if (!names.count(peer)) throw SpecError("route peer unknown: " + peer);
            if (!w.valid()) throw SpecError("route window invalid for " + peer);
        }
        if (spec.remuneration_override &&
            spec.remuneration_override->size() != spec.explicit_route->size())
            throw SpecError("remuneration override must match the route length");
    }
}

RunResult collect(Runtime& rt, const ScenarioSpec& spec) {
    RunResult result;
    if (rt.sid >= 0) {
        const Service& s = rt.service();
        result.status = status_name(s.status);
        result.guilty = s.guilty;
    }
    result.locked_pool_delta = rt.contract.ledger().locked_pool();
    for (const auto& p : spec.participants)
        result.finals[p.name] = rt.contract.ledger().holdings(p.name);
    result.trace = rt.contract.events();
    for (const auto& rec : rt.contract.ledger().inflows())
        if (rec.reason != "genesis") result.inflows.push_back(rec);
    result.served = rt.served;
    return result;
}

}  // namespace

RunResult run_scenario(const ScenarioSpec& spec) {
    validate_spec(spec);

    Ledger ledger;
    for (const auto& p : spec.participants)
        ledger.open_account(AccountId{p.name, p.role}, p.balance);

    if (!spec.run_service) {
        RunResult result;
        for (const auto& p : spec.participants) result.finals[p.name] = ledger.holdings(p.name);
        return result;
    }

    Runtime rt(spec, std::move(ledger));
    for (const auto& p : spec.participants) {
        rt.keys[p.name] = rt.suite.cipher->generate(rt.rng);
        if (p.role == Role::sender) rt.sender = p.name;
        if (p.role == Role::recipient) rt.recipient = p.name;
    }
    rt.behaviors = spec.behaviors;

    // registration strictly before the selection deadline (= setup time)
    rt.hour = spec.setup_time - 1;
    for (const auto& p : spec.participants) {
        if (p.role != Role::peer) continue;
        std::optional<TimeWindow> window = p.window;
        if (!window && spec.explicit_route) {
            for (const auto& [peer, w] : *spec.explicit_route)
                if (peer == p.name) window = w;
        }
        if (!window) continue;
        rt.contract.new_peer(rt.ctx(p.name), {*window}, rt.keys[p.name].public_key, p.balance);
    }

    ServicePlan plan;
    plan.sender = rt.sender;
    plan.recipient = rt.recipient;
    plan.value = spec.value;
    plan.setup_time = spec.setup_time;
    plan.release_time = spec.release_time;
    plan.transfer_hours = spec.transfer_hours;
    plan.pricing = spec.pricing;
    plan.payment_override = spec.remuneration_override;
    plan.deposit_override = spec.deposit_override;
    const Money deposit = spec.deposit_override
                              ? *spec.deposit_override
                              : required_deposit(spec.value, spec.pricing);
    if (spec.explicit_route) {
        for (std::size_t i = 0; i < spec.explicit_route->size(); ++i) {
            const auto& [peer, w] = (*spec.explicit_route)[i];
            TimePoint seg_end =
                i + 1 < spec.explicit_route->size()
                    ? (*spec.explicit_route)[i + 1].second.begin + spec.transfer_hours
                    : spec.release_time + spec.transfer_hours;
            plan.route.hops.push_back(RouteHop{peer, w, TimeWindow{w.begin, seg_end}});
        }
    } else {
        SelectionRequest req{TimeWindow{spec.setup_time, spec.release_time}, spec.transfer_hours,
                             deposit, spec.setup_time};
        plan.route = select_peers(rt.contract.registry_windows(), req);
        if (spec.remuneration_override &&
            spec.remuneration_override->size() != plan.route.hops.size())
            throw SpecError("remuneration override must match the selected route length");
    }

    std::vector<HopSchedule> schedule;
    std::vector<Money> payments;
    try {
        schedule = build_schedule(plan);
        payments = hop_payments(plan, schedule);
    } catch (const Error& e) {
        throw SpecError(std::string("route is inconsistent: ") + e.what());
    }

    for (const auto& hop : plan.route.hops) rt.hop_owner.push_back(hop.owner);
    const int k = rt.hops();

    rt.arrival_hour.assign(static_cast<std::size_t>(k + 2), 0);
    for (int pos = 1; pos <= k; ++pos)
        rt.arrival_hour[static_cast<std::size_t>(pos)] =
            pos == 1 ? spec.setup_time
                     : plan.route.hops[static_cast<std::size_t>(pos - 1)].segment.begin;
    rt.arrival_hour[static_cast<std::size_t>(k + 1)] = spec.release_time;

    std::set<TimePoint> boundaries{spec.setup_time + spec.transfer_hours,
                                   spec.release_time + spec.transfer_hours};
    for (const auto& hop : schedule) {
        boundaries.insert(hop.d1);
        boundaries.insert(hop.d2);
    }

    Money escrow_needed;
    for (const auto& m : payments) escrow_needed += m;
    Money signing_payment = deposit + escrow_needed + Money::micro(1);

    const TimePoint horizon = spec.release_time + spec.transfer_hours;
    for (rt.hour = spec.setup_time; rt.hour <= horizon; ++rt.hour) {
        rt.sub = 0;

        // phase 1: scheduled contract submissions
        if (rt.hour == spec.setup_time) {
            rt.sid = rt.contract.sender_sign(rt.ctx(rt.sender), plan, signing_payment);
            rt.contract.recipient_sign(rt.ctx(rt.recipient), rt.sid, signing_payment);
            if (!rt.contract.setup(rt.ctx(rt.sender), rt.sid)) break;

            const Behavior& sb = rt.behavior(rt.sender);
            if (sb.kind != BehaviorKind::skip_certificate) {
                std::vector<RouteKey> route_keys;
                for (const auto& owner : rt.hop_owner)
                    route_keys.push_back(RouteKey{owner, rt.keys[owner].public_key});
                Bytes secret = rt.rng.bytes(32);
                rt.onion = build_onion(rt.suite, secret, route_keys,
                                       RouteKey{rt.recipient, rt.keys[rt.recipient].public_key},
                                       rt.rng);
                rt.onion_built = true;
                std::vector<Bytes> commitments;
                for (const auto& cert : rt.onion.certificates) commitments.push_back(cert.commitment);
                Bytes chan = rt.rng.bytes(16);
                WhisperEnvelope env =
                    seal_channel_key(rt.suite, rt.keys[rt.party(1)].public_key, chan, rt.rng);
                rt.contract.set_cert(rt.ctx(rt.sender), rt.sid, std::move(commitments),
                                     rt.onion.innermost_hash, std::move(env));
                rt.channel_key[0] = std::move(chan);
            }
        }

        // phase 2: handoffs, then off-path release-ahead leaks
        for (int pos = 1; pos <= k + 1 && rt.active(); ++pos)
            if (rt.arrival_hour[static_cast<std::size_t>(pos)] == rt.hour)
                attempt_handoff(rt, pos - 1);
        for (const auto& owner : rt.hop_owner) {
            const Behavior& b = rt.behavior(owner);
            if (b.kind != BehaviorKind::release_ahead || b.release_at != rt.hour) continue;
            auto held = rt.inner_held.find(owner);
            if (held == rt.inner_held.end() || rt.leaked.count(owner)) continue;
            // only the recipient-only ciphertext is usable and provable: a
            // still-wrapped middle layer neither decrypts nor matches the
            // committed digest, so that leak goes nowhere
            if (!rt.service().commitments_set ||
                rt.suite.digest(held->second.blob) != rt.service().innermost_hash)
                continue;
            rt.pending_evidence.emplace_back(b.release_target, held->second.blob);
            rt.leaked.insert(owner);
            if (b.gains_value && spec.value > Money{})
                rt.contract.ledger().record_inflow(owner, spec.value, "release-ahead-value");
        }

        // phase 3: reports
        for (auto it = rt.pending_evidence.begin();
             it != rt.pending_evidence.end() && rt.active();) {
            const Behavior& tb = rt.behavior(it->first);
            if (tb.report == ReportPolicy::always && rt.hour < spec.release_time) {
                rt.contract.release_report(rt.ctx(it->first), rt.sid, it->second);
                rt.contract.release_award(rt.ctx(it->first), rt.sid);
                it = rt.pending_evidence.erase(it);
            } else {
                ++it;
            }
        }
        for (int pos = 1; pos <= k + 1 && rt.active(); ++pos) {
            TimePoint cert_deadline = pos <= k
                                          ? schedule[static_cast<std::size_t>(pos - 1)].d1
                                          : rt.service().recipient_deadline;
            if (rt.hour != cert_deadline - 1) continue;
            const std::string name = rt.party(pos);
            if (rt.has_package.count(name)) continue;
            if (rt.behavior(name).report != ReportPolicy::always) continue;
            if (!predecessors_clean(rt, pos)) continue;  // a visible fault settles itself
            rt.contract.drop_report(rt.ctx(name), rt.sid, pos);
            rt.contract.drop_award(rt.ctx(name), rt.sid);
        }

        // phase 4: automatic verification at each deadline boundary
        if (boundaries.count(rt.hour) && rt.active())
            rt.contract.verification(rt.ctx(rt.recipient), rt.sid);

        if (rt.sid >= 0 && !rt.active()) break;
    }

    // a withheld package realizes its value for the withholder once the
    // service has terminated around it
    if (rt.sid >= 0) {
        const Service& s = rt.service();
        if (s.status == ServiceStatus::terminated_guilty ||
            s.status == ServiceStatus::dispute_closed) {
            for (const auto& p : spec.participants) {
                const Behavior& b = rt.behavior(p.name);
                bool drop_class = b.kind == BehaviorKind::drop_at_hop ||
                                  b.kind == BehaviorKind::skip_certificate ||
                                  b.kind == BehaviorKind::skip_whisper_key;
                if (drop_class && b.gains_value && p.name != rt.sender &&
                    rt.has_package.count(p.name) && spec.value > Money{})
                    rt.contract.ledger().record_inflow(p.name, spec.value, "drop-attack-value");
            }
        }
    }

    return collect(rt, spec);
}

RunResult replay_trace(const ScenarioSpec& spec, const std::vector<std::string>& recorded_trace) {
    RunResult fresh = run_scenario(spec);
    auto lines = fresh.trace_lines();
    if (lines.size() != recorded_trace.size())
        throw TraceCorrupt("event count differs: " + std::to_string(lines.size()) + " vs " +
                           std::to_string(recorded_trace.size()));
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (lines[i] != recorded_trace[i])
            throw TraceCorrupt("divergence at event " + std::to_string(i + 1) + ": " + lines[i]);
    return fresh;
}

std::vector<ConditionCase> condition_suite() {
    // Five peers on a 1000-hour service, value 3 ETH, deposit 3.6, award 0.3,
    // per-hop payments supplied as inputs.
    auto base = [] {
        ScenarioSpec spec;
        auto add = [&](const std::string& name, Role role) {
            spec.participants.push_back({name, role, Money::eth(5), std::nullopt});
        };
        add("S", Role::sender);
        add("P1", Role::peer);
        add("P2", Role::peer);
        add("P3", Role::peer);
        add("P4", Role::peer);
        add("P5", Role::peer);
        add("R", Role::recipient);
        spec.value = Money::eth(3);
        spec.transfer_hours = 1;
        spec.seed = 42;
        spec.setup_time = 0;
        spec.release_time = 1000;
        spec.remuneration_override = std::vector<Money>{
            Money::parse_eth("0.010"), Money::parse_eth("0.017"), Money::parse_eth("0.026"),
            Money::parse_eth("0.035"), Money::parse_eth("0.040")};
        spec.explicit_route = std::vector<std::pair<std::string, TimeWindow>>{
            {"P1", {0, 242}},    {"P2", {240, 472}},  {"P3", {470, 714}},
            {"P4", {712, 891}},  {"P5", {889, 1002}}};
        return spec;
    };

    auto expect = [](std::initializer_list<std::pair<const char*, const char*>> list) {
        std::map<std::string, Money> out;
        for (const auto& [name, eth] : list) out[name] = Money::parse_eth(eth);
        return out;
    };

    std::vector<ConditionCase> suite;

    {
        ConditionCase c;
        c.name = "baseline";
        c.spec = base();
        c.spec.run_service = false;
        c.expected_finals = expect({{"S", "5"}, {"P1", "5"}, {"P2", "5"}, {"P3", "5"},
                                    {"P4", "5"}, {"P5", "5"}, {"R", "5"}});
        suite.push_back(std::move(c));
    }
    {
        ConditionCase c;
        c.name = "honest-completion";
        c.spec = base();
        c.expected_finals = expect({{"S", "7.872"}, {"P1", "5.010"}, {"P2", "5.017"},
                                    {"P3", "5.026"}, {"P4", "5.035"}, {"P5", "5.040"},
                                    {"R", "5"}});
        suite.push_back(std::move(c));
    }
    {
        ConditionCase c;
        c.name = "withheld-whisper-key";
        c.spec = base();
        c.spec.behaviors["P2"] = Behavior{BehaviorKind::skip_whisper_key, "", 0, true,
                                          ReportPolicy::always, true};
        c.expected_finals = expect({{"S", "8.489"}, {"P1", "5.010"}, {"P2", "4.4"},
                                    {"P3", "5.026"}, {"P4", "5.035"}, {"P5", "5.040"},
                                    {"R", "5"}});
        suite.push_back(std::move(c));
    }
    {
        ConditionCase c;
        c.name = "early-release";
        c.spec = base();
        c.spec.behaviors["P5"] = Behavior{BehaviorKind::release_ahead, "P1", 950, true,
                                          ReportPolicy::always, true};
        c.expected_finals = expect({{"S", "8.212"}, {"P1", "5.310"}, {"P2", "5.017"},
                                    {"P3", "5.026"}, {"P4", "5.035"}, {"P5", "4.4"},
                                    {"R", "5"}});
        suite.push_back(std::move(c));
    }
    {
        ConditionCase c;
        c.name = "handoff-drop-dispute";
        c.spec = base();
        c.spec.behaviors["P4"] = Behavior{BehaviorKind::drop_at_hop, "", 0, true,
                                          ReportPolicy::always, true};
        c.expected_finals = expect({{"S", "1.347"}, {"P1", "5.010"}, {"P2", "5.017"},
                                    {"P3", "5.026"}, {"P4", "4.4"}, {"P5", "1.7"},
                                    {"R", "5"}});
        c.expected_locked_delta = Money::parse_eth("10.5");
        suite.push_back(std::move(c));
    }
    return suite;
}

}  // namespace trs
