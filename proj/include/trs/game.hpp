#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "trs/money.hpp"

namespace trs {

// Inputs of the enforcement game: data value v, per-peer pay r and service
// cost c, frozen deposit d_s and reporting award a, plus the type profile
// (whether a dropping peer / recipient can monetize the withheld data).
struct GameParams {
    Money value;
    Money peer_pay;
    Money peer_cost;
    Money deposit;
    Money award;
    bool peer_gains_value = true;
    bool recipient_gains_value = true;
};

enum class SenderAction { submit, withhold };
// Collapsed per-player choice: do both submission and verification, or
// neither. The mixed combinations are dominated and replaced by these two.
enum class PartAction { comply, defect };

struct StrategyProfile {
    SenderAction sender = SenderAction::submit;
    std::vector<PartAction> peers;
    PartAction recipient = PartAction::comply;

    bool all_honest() const;
    std::string str() const;
};

struct GameNode {
    int id = 0;
    int parent = -1;
    int level = 0;
    std::array<int, 2> child{-1, -1};   // edge 0 = comply/submit, 1 = defect/withhold
    std::vector<Money> payoff;          // terminals only: [S, P1..Pk, R]
};

struct InformationSet {
    int player = 0;  // 0 = sender, 1..k = peers, k+1 = recipient
    std::string label;
    std::vector<int> nodes;
    std::vector<std::string> actions;
};

// Perfect binary tree over the decision stages
//   sender submit | peer 1 .. peer k | recipient certificate | recipient verify
// with one strategic information set per player: peers cannot observe their
// predecessors and the recipient's two drawn stages are bound to one
// compound choice. Terminal payoffs come from replaying each behavior
// combination through the contract.
struct GameTree {
    GameParams params;
    int peer_count = 0;
    std::vector<GameNode> nodes;  // heap layout: children of n are 2n+1, 2n+2
    std::vector<InformationSet> infosets;

    int levels() const { return peer_count + 3; }
    int choice_count() const { return (1 << levels()) - 1; }
    int terminal_count() const { return 1 << levels(); }

    const std::vector<Money>& payoff_at_path(unsigned path_bits) const;
    const std::vector<Money>& payoff_of(const StrategyProfile& profile) const;
    unsigned profile_path_bits(const StrategyProfile& profile) const;
};

// Replays one behavior combination (bit per stage, most significant stage
// first: sender, peers in order, recipient certificate, recipient verify)
// through a synthetic service and returns each player's balance delta net of
// incurred service cost.
std::vector<Money> payoff_by_replay(const GameParams& params, int peer_count, unsigned path_bits);

GameTree build_enforcement_game(const GameParams& params, int peer_count);
GameTree build_enforcement_game_serial(const GameParams& params, int peer_count);

// All pure-strategy Nash equilibria by exhaustive profile enumeration.
std::vector<StrategyProfile> enumerate_nash(const GameTree& game);
std::vector<StrategyProfile> enumerate_nash_serial(const GameTree& game);

// True iff action_a always pays at least as much as action_b for the player
// against every combination of opponent strategies, strictly somewhere.
// Actions: 0 = comply/submit, 1 = defect/withhold.
bool check_dominance(const GameTree& game, int player, int action_a, int action_b);

struct VariantOutcome {
    bool peer_gains_value = false;
    bool recipient_gains_value = false;
    int equilibrium_count = 0;
    bool honest_is_equilibrium = false;
    bool honest_unique = false;
};

struct VariantReport {
    std::vector<VariantOutcome> variants;  // the four type profiles
    bool honest_in_all = false;
};

VariantReport analyze_bayesian_variants(const GameParams& params, int peer_count);

// Two-stage bribery game around an early release: the bribed peer accepts or
// rejects, the adversary then reports or stays silent. Payoffs are deltas
// against declining the attack; an indifferent party is assumed to attack.
struct BriberyReport {
    Money bribe;
    Money peer_reject;
    Money peer_accept_reported;
    Money peer_accept_unreported;
    Money adversary_report;
    Money adversary_silent;
    bool adversary_reports = false;
    bool peer_accepts = false;
    bool equilibrium_reject_report = false;
};

BriberyReport analyze_release_bribery(const GameParams& params, Money bribe);

// Three-party dispute game at one handoff: the sender (fake commitments),
// the first peer (withhold the package) or the second peer (deny reception)
// may attack; the second peer then reports or stays silent.
struct DisputeReport {
    Money sender_drop;
    Money first_peer_drop;
    Money second_peer_drop_report;
    Money second_peer_drop_silent;
    bool reporting_dominant = false;
    bool params_ok = false;           // deposit exceeds value plus award
    bool no_drop_equilibrium = false;
    std::string violation;
};

DisputeReport analyze_drop_dispute(const GameParams& params);

}  // namespace trs
