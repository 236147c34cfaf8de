#include "trs/game.hpp"

#include <sstream>

#include "trs/errors.hpp"
#include "trs/harness.hpp"

namespace trs {
namespace {

constexpr int kMaxPeers = 6;  // profile space stays exhaustively enumerable

std::string peer_name(int i) { return "Q" + std::to_string(i + 1); }

// Synthetic service for payoff replays: one 4-hour segment per peer with a
// one-hour transfer buffer. Per-hop pay is overridden with r, the deposit
// with d_s; reporting is disabled because the enforcement game has no report
// moves (the reporting games are analyzed separately).
ScenarioSpec replay_spec(const GameParams& params, int peer_count, unsigned path_bits) {
    if (peer_count < 0 || peer_count > kMaxPeers) throw Error("peer count out of range");
    const int levels = peer_count + 3;
    auto bit = [&](int level) { return (path_bits >> (levels - 1 - level)) & 1u; };

    ScenarioSpec spec;
    spec.seed = 1;
    spec.crypto = "test";
    spec.value = params.value;
    spec.deposit_override = params.deposit;
    spec.transfer_hours = 1;
    spec.setup_time = 0;
    spec.release_time = peer_count > 0 ? 4 * peer_count : 4;

    Money balance = params.deposit + peer_count * params.peer_pay + params.value + Money::eth(1);
    spec.participants.push_back({"S", Role::sender, balance, std::nullopt});
    for (int i = 0; i < peer_count; ++i)
        spec.participants.push_back({peer_name(i), Role::peer, balance, std::nullopt});
    spec.participants.push_back({"R", Role::recipient, balance, std::nullopt});

    std::vector<std::pair<std::string, TimeWindow>> route;
    for (int i = 0; i < peer_count; ++i) {
        TimePoint begin = 4 * i;
        TimePoint end = i + 1 < peer_count ? 4 * (i + 1) + 2 : spec.release_time + 2;
        route.emplace_back(peer_name(i), TimeWindow{begin, end});
    }
    spec.explicit_route = std::move(route);
    spec.remuneration_override = std::vector<Money>(static_cast<std::size_t>(peer_count),
                                                    params.peer_pay);

    auto quiet = [](Behavior b) {
        b.report = ReportPolicy::never;
        return b;
    };
    {
        Behavior b;
        if (bit(0)) b.kind = BehaviorKind::skip_certificate;
        b.gains_value = false;
        spec.behaviors["S"] = quiet(b);
    }
    for (int i = 0; i < peer_count; ++i) {
        Behavior b;
        if (bit(1 + i)) {
            b.kind = BehaviorKind::skip_certificate;
            b.verifies = false;
        }
        b.gains_value = params.peer_gains_value;
        spec.behaviors[peer_name(i)] = quiet(b);
    }
    {
        Behavior b;
        if (bit(levels - 2)) b.kind = BehaviorKind::skip_certificate;
        if (bit(levels - 1)) b.verifies = false;
        b.gains_value = params.recipient_gains_value;
        spec.behaviors["R"] = quiet(b);
    }
    return spec;
}

}  // namespace

std::vector<Money> payoff_by_replay(const GameParams& params, int peer_count,
                                    unsigned path_bits) {
    ScenarioSpec spec = replay_spec(params, peer_count, path_bits);
    Money balance = spec.participants.front().balance;
    RunResult run = run_scenario(spec);

    std::vector<Money> payoff;
    payoff.reserve(static_cast<std::size_t>(peer_count) + 2);
    payoff.push_back(run.finals.at("S") - balance);
    for (int i = 0; i < peer_count; ++i) {
        Money u = run.finals.at(peer_name(i)) - balance;
        if (run.served.count(peer_name(i))) u -= params.peer_cost;
        payoff.push_back(u);
    }
    payoff.push_back(run.finals.at("R") - balance);
    return payoff;
}

bool StrategyProfile::all_honest() const {
    if (sender != SenderAction::submit || recipient != PartAction::comply) return false;
    for (auto a : peers)
        if (a != PartAction::comply) return false;
    return true;
}

std::string StrategyProfile::str() const {
    std::ostringstream os;
    os << "S:" << (sender == SenderAction::submit ? "s" : "!s");
    for (std::size_t i = 0; i < peers.size(); ++i)
        os << " P" << i + 1 << ':' << (peers[i] == PartAction::comply ? "sv" : "!s!v");
    os << " R:" << (recipient == PartAction::comply ? "sv" : "!s!v");
    return os.str();
}

unsigned GameTree::profile_path_bits(const StrategyProfile& profile) const {
    unsigned bits = 0;
    bits = (bits << 1) | (profile.sender == SenderAction::withhold ? 1u : 0u);
    for (auto a : profile.peers) bits = (bits << 1) | (a == PartAction::defect ? 1u : 0u);
    unsigned r = profile.recipient == PartAction::defect ? 1u : 0u;
    bits = (bits << 1) | r;  // certificate stage
    bits = (bits << 1) | r;  // verify stage, tied to the compound choice
    return bits;
}

const std::vector<Money>& GameTree::payoff_at_path(unsigned path_bits) const {
    int node = 0;
    for (int level = 0; level < levels(); ++level) {
        unsigned bit = (path_bits >> (levels() - 1 - level)) & 1u;
        node = nodes[static_cast<std::size_t>(node)].child[bit];
    }
    return nodes[static_cast<std::size_t>(node)].payoff;
}

const std::vector<Money>& GameTree::payoff_of(const StrategyProfile& profile) const {
    return payoff_at_path(profile_path_bits(profile));
}

namespace {

GameTree build_tree(const GameParams& params, int peer_count, bool parallel) {
    if (peer_count < 0 || peer_count > kMaxPeers)
        throw Error("enforcement game supports 0.." + std::to_string(kMaxPeers) + " peers");
    GameTree tree;
    tree.params = params;
    tree.peer_count = peer_count;

    const int levels = peer_count + 3;
    const int total = (1 << (levels + 1)) - 1;
    const int first_terminal = (1 << levels) - 1;
    tree.nodes.resize(static_cast<std::size_t>(total));
    for (int id = 0; id < total; ++id) {
        GameNode& n = tree.nodes[static_cast<std::size_t>(id)];
        n.id = id;
        n.parent = id == 0 ? -1 : (id - 1) / 2;
        n.level = 0;
        for (int probe = id; probe > 0; probe = (probe - 1) / 2) ++n.level;
        if (id < first_terminal) n.child = {2 * id + 1, 2 * id + 2};
    }

    const int terminals = 1 << levels;
    std::vector<std::vector<Money>> payoffs(static_cast<std::size_t>(terminals));
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int path = 0; path < terminals; ++path)
        payoffs[static_cast<std::size_t>(path)] =
            payoff_by_replay(params, peer_count, static_cast<unsigned>(path));
    for (int path = 0; path < terminals; ++path)
        tree.nodes[static_cast<std::size_t>(first_terminal + path)].payoff =
            std::move(payoffs[static_cast<std::size_t>(path)]);

    auto level_nodes = [&](int level) {
        std::vector<int> ids;
        for (int id = (1 << level) - 1; id < (1 << (level + 1)) - 1; ++id) ids.push_back(id);
        return ids;
    };
    tree.infosets.push_back({0, "sender:submit", level_nodes(0), {"s", "!s"}});
    for (int i = 0; i < peer_count; ++i)
        tree.infosets.push_back(
            {1 + i, "peer" + std::to_string(i + 1), level_nodes(1 + i), {"sv", "!s!v"}});
    // the recipient's certificate and verify stages carry one compound choice
    auto rc = level_nodes(levels - 2);
    auto rv = level_nodes(levels - 1);
    rc.insert(rc.end(), rv.begin(), rv.end());
    tree.infosets.push_back({peer_count + 1, "recipient", std::move(rc), {"sv", "!s!v"}});
    return tree;
}

StrategyProfile profile_from_mask(unsigned mask, int peer_count) {
    StrategyProfile p;
    p.sender = (mask & 1u) ? SenderAction::withhold : SenderAction::submit;
    p.peers.resize(static_cast<std::size_t>(peer_count));
    for (int i = 0; i < peer_count; ++i)
        p.peers[static_cast<std::size_t>(i)] =
            (mask >> (1 + i)) & 1u ? PartAction::defect : PartAction::comply;
    p.recipient = (mask >> (1 + peer_count)) & 1u ? PartAction::defect : PartAction::comply;
    return p;
}

bool is_nash(const GameTree& game, unsigned mask) {
    const int k = game.peer_count;
    StrategyProfile profile = profile_from_mask(mask, k);
    const auto& u = game.payoff_of(profile);
    for (int player = 0; player <= k + 1; ++player) {
        StrategyProfile alt = profile_from_mask(mask ^ (1u << player), k);
        const auto& v = game.payoff_of(alt);
        if (v[static_cast<std::size_t>(player)] > u[static_cast<std::size_t>(player)])
            return false;
    }
    return true;
}

std::vector<StrategyProfile> enumerate_impl(const GameTree& game, bool parallel) {
    const int k = game.peer_count;
    const unsigned count = 1u << (k + 2);
    std::vector<char> keep(count, 0);
#pragma omp parallel for schedule(static) if (parallel)
    for (int mask = 0; mask < static_cast<int>(count); ++mask)
        keep[static_cast<std::size_t>(mask)] = is_nash(game, static_cast<unsigned>(mask));
    std::vector<StrategyProfile> out;
    for (unsigned mask = 0; mask < count; ++mask)
        if (keep[mask]) out.push_back(profile_from_mask(mask, k));
    return out;
}

}  // namespace

GameTree build_enforcement_game(const GameParams& params, int peer_count) {
    return build_tree(params, peer_count, true);
}

GameTree build_enforcement_game_serial(const GameParams& params, int peer_count) {
    return build_tree(params, peer_count, false);
}

std::vector<StrategyProfile> enumerate_nash(const GameTree& game) {
    return enumerate_impl(game, true);
}

std::vector<StrategyProfile> enumerate_nash_serial(const GameTree& game) {
    return enumerate_impl(game, false);
}

bool check_dominance(const GameTree& game, int player, int action_a, int action_b) {
    if (action_a == action_b) return false;
    const int k = game.peer_count;
    const int players = k + 2;
    if (player < 0 || player >= players) throw Error("no such player");
    bool strict = false;
    for (unsigned others = 0; others < (1u << (players - 1)); ++others) {
        unsigned mask_a = 0, mask_b = 0;
        int bit_index = 0;
        for (int p = 0; p < players; ++p) {
            unsigned bit = p == player ? 0u : (others >> bit_index++) & 1u;
            mask_a |= bit << p;
            mask_b |= bit << p;
        }
        mask_a |= static_cast<unsigned>(action_a) << player;
        mask_b |= static_cast<unsigned>(action_b) << player;
        Money ua = game.payoff_of(profile_from_mask(mask_a, k))[static_cast<std::size_t>(player)];
        Money ub = game.payoff_of(profile_from_mask(mask_b, k))[static_cast<std::size_t>(player)];
        if (ua < ub) return false;
        if (ua > ub) strict = true;
    }
    return strict;
}

VariantReport analyze_bayesian_variants(const GameParams& params, int peer_count) {
    VariantReport report;
    report.honest_in_all = true;
    for (bool peer_gains : {false, true}) {
        for (bool recipient_gains : {false, true}) {
            GameParams variant = params;
            variant.peer_gains_value = peer_gains;
            variant.recipient_gains_value = recipient_gains;
            GameTree tree = build_enforcement_game(variant, peer_count);
            auto equilibria = enumerate_nash(tree);
            VariantOutcome outcome;
            outcome.peer_gains_value = peer_gains;
            outcome.recipient_gains_value = recipient_gains;
            outcome.equilibrium_count = static_cast<int>(equilibria.size());
            for (const auto& profile : equilibria)
                outcome.honest_is_equilibrium |= profile.all_honest();
            outcome.honest_unique = outcome.honest_is_equilibrium && equilibria.size() == 1;
            report.honest_in_all &= outcome.honest_is_equilibrium;
            report.variants.push_back(outcome);
        }
    }
    return report;
}

BriberyReport analyze_release_bribery(const GameParams& params, Money bribe) {
    if (bribe.is_negative()) throw ParamViolation("bribe cannot be negative");
    BriberyReport r;
    r.bribe = bribe;
    Money honest_margin = params.peer_pay - params.peer_cost;
    r.peer_reject = honest_margin;
    r.peer_accept_reported = bribe - params.deposit;
    r.peer_accept_unreported = bribe + honest_margin;
    r.adversary_report = params.value + params.award - bribe;
    r.adversary_silent = params.value - bribe;
    // reporting costs the adversary nothing and adds the award
    r.adversary_reports = params.award > Money{};
    r.peer_accepts = r.peer_accept_reported >= r.peer_reject;  // indifference attacks
    r.equilibrium_reject_report = r.adversary_reports && !r.peer_accepts;
    return r;
}

DisputeReport analyze_drop_dispute(const GameParams& params) {
    DisputeReport r;
    // every dispute path confiscates the attacker's own deposit; the second
    // peer can additionally pocket the award by reporting the dispute it
    // caused itself
    r.sender_drop = params.value - params.deposit;
    r.first_peer_drop = params.value - params.deposit;
    r.second_peer_drop_report = params.value + params.award - params.deposit;
    r.second_peer_drop_silent = params.value - params.deposit;
    r.reporting_dominant = params.award > Money{};
    r.params_ok = params.deposit > params.value + params.award;
    Money worst = r.second_peer_drop_report;
    if (r.sender_drop > worst) worst = r.sender_drop;
    if (r.first_peer_drop > worst) worst = r.first_peer_drop;
    r.no_drop_equilibrium = r.reporting_dominant && worst < Money{};
    if (!r.params_ok) {
        r.violation = "deposit " + params.deposit.to_eth() + " does not exceed value plus award " +
                      (params.value + params.award).to_eth() +
                      "; a self-reported drop by the second peer nets " +
                      r.second_peer_drop_report.to_eth();
    }
    return r;
}

}  // namespace trs
