#include "doctest.h"

#include "trs/errors.hpp"
#include "trs/game.hpp"
#include "trs/rng.hpp"

using namespace trs;

namespace {

GameParams baseline_params() {
    GameParams p;
    p.value = Money::eth(3);
    p.peer_pay = Money::parse_eth("0.026");
    p.peer_cost = Money::parse_eth("0.013");
    p.deposit = Money::parse_eth("3.6");
    p.award = Money::parse_eth("0.3");
    return p;
}

StrategyProfile honest_profile(int peers) {
    StrategyProfile p;
    p.peers.assign(static_cast<std::size_t>(peers), PartAction::comply);
    return p;
}

bool contains_honest(const std::vector<StrategyProfile>& profiles) {
    for (const auto& p : profiles)
        if (p.all_honest()) return true;
    return false;
}

}  // namespace

TEST_CASE("the one-peer tree has the expected node counts") {
    GameTree tree = build_enforcement_game(baseline_params(), 1);
    CHECK(tree.choice_count() == 15);
    CHECK(tree.terminal_count() == 16);
    CHECK(tree.nodes.size() == 31);
    // strategic choice sets: sender, the peer, the recipient compound
    REQUIRE(tree.infosets.size() == 3);
    CHECK(tree.infosets[0].nodes.size() == 1);
    CHECK(tree.infosets[1].nodes.size() == 2);   // the peer cannot see the sender's move
    CHECK(tree.infosets[2].nodes.size() == 12);  // both recipient stages, one choice
    for (const auto& info : tree.infosets) CHECK(info.actions.size() == 2);
}

TEST_CASE("tree sizes follow two leaves per decision stage") {
    CHECK(build_enforcement_game(baseline_params(), 0).terminal_count() == 8);
    CHECK(build_enforcement_game(baseline_params(), 2).terminal_count() == 32);
    GameTree tree = build_enforcement_game(baseline_params(), 2);
    CHECK(tree.choice_count() == 31);
    for (const auto& info : tree.infosets) CHECK(info.actions.size() == 2);
}

TEST_CASE("replayed payoffs match the settlement arithmetic") {
    GameParams p = baseline_params();
    GameTree tree = build_enforcement_game(p, 1);

    SUBCASE("all honest: sender nets v - r, peer r - c, recipient zero") {
        auto u = tree.payoff_of(honest_profile(1));
        CHECK(u[0] == p.value - p.peer_pay);
        CHECK(u[1] == p.peer_pay - p.peer_cost);
        CHECK(u[2] == Money{});
    }
    SUBCASE("a defecting recipient ends at v - d_s") {
        StrategyProfile profile = honest_profile(1);
        profile.recipient = PartAction::defect;
        auto u = tree.payoff_of(profile);
        CHECK(u[2] == p.value - p.deposit);
        CHECK(u[1] == p.peer_pay - p.peer_cost);  // the peer still served
    }
    SUBCASE("a withholding sender loses its deposit and peers are made whole") {
        StrategyProfile profile = honest_profile(1);
        profile.sender = SenderAction::withhold;
        auto u = tree.payoff_of(profile);
        CHECK(u[0] == -p.deposit - p.peer_pay);
        CHECK(u[1] == p.peer_pay);  // paid without having had to serve
        CHECK(u[2] == Money{});
    }
    SUBCASE("a defecting peer forfeits its deposit for the value") {
        StrategyProfile profile = honest_profile(1);
        profile.peers[0] = PartAction::defect;
        auto u = tree.payoff_of(profile);
        CHECK(u[1] == p.value - p.deposit);
        CHECK(u[0] == p.deposit);  // confiscation covers the sender
        CHECK(u[2] == Money{});
    }
}

TEST_CASE("mixed submit/verify branches collapse onto the pure ones") {
    GameParams p = baseline_params();
    GameTree tree = build_enforcement_game(p, 1);
    // recipient path bits: (cert, verify); verification skipping never moves
    // money because boundary checks settle regardless
    auto honest = tree.payoff_at_path(0b0000);
    auto skip_verify = tree.payoff_at_path(0b0001);
    CHECK(honest == skip_verify);
    auto defect = tree.payoff_at_path(0b0011);
    auto cert_only_skip = tree.payoff_at_path(0b0010);
    CHECK(defect == cert_only_skip);
}

TEST_CASE("honest play is the unique equilibrium under d_s > v") {
    GameParams p = baseline_params();
    for (int peers : {1, 2, 3}) {
        CAPTURE(peers);
        GameTree tree = build_enforcement_game(p, peers);
        auto equilibria = enumerate_nash(tree);
        REQUIRE(equilibria.size() == 1);
        CHECK(equilibria[0].all_honest());
        // the serial reference enumerates the same set
        auto serial = enumerate_nash_serial(tree);
        REQUIRE(serial.size() == 1);
        CHECK(serial[0].all_honest());
    }
}

TEST_CASE("parallel and serial tree builds are identical") {
    GameParams p = baseline_params();
    GameTree a = build_enforcement_game(p, 2);
    GameTree b = build_enforcement_game_serial(p, 2);
    REQUIRE(a.nodes.size() == b.nodes.size());
    for (std::size_t i = 0; i < a.nodes.size(); ++i) CHECK(a.nodes[i].payoff == b.nodes[i].payoff);
}

TEST_CASE("a cheap deposit invites deviations") {
    GameParams p = baseline_params();
    p.deposit = Money::eth(2);  // below the value of 3
    GameTree tree = build_enforcement_game(p, 1);
    auto equilibria = enumerate_nash(tree);
    CHECK(!contains_honest(equilibria));
    // the recipient's deviation is the profitable one
    StrategyProfile deviation = honest_profile(1);
    deviation.recipient = PartAction::defect;
    CHECK(tree.payoff_of(deviation)[2] > tree.payoff_of(honest_profile(1))[2]);
}

TEST_CASE("a zero-value secret leaves honesty in equilibrium") {
    GameParams p = baseline_params();
    p.value = Money{};
    p.deposit = Money::eth(1);
    GameTree tree = build_enforcement_game(p, 1);
    auto equilibria = enumerate_nash(tree);
    CHECK(contains_honest(equilibria));
}

TEST_CASE("dominance thresholds sit exactly at the printed inequalities") {
    GameParams p = baseline_params();
    const int recipient = 2, peer = 1;

    SUBCASE("recipient: comply dominates defect iff d_s > v") {
        GameTree tree = build_enforcement_game(p, 1);
        CHECK(check_dominance(tree, recipient, 0, 1));
        p.deposit = Money::eth(2);
        CHECK(!check_dominance(build_enforcement_game(p, 1), recipient, 0, 1));
        p.deposit = p.value;  // equality: no strict part anywhere that matters
        CHECK(!check_dominance(build_enforcement_game(p, 1), recipient, 0, 1));
    }
    SUBCASE("peer: comply dominates defect iff d_s > v - (r - c)") {
        p.deposit = Money::eth(3);  // d_s = v but r > c keeps the margin
        GameTree tree = build_enforcement_game(p, 1);
        CHECK(check_dominance(tree, peer, 0, 1));
        p.deposit = p.value - (p.peer_pay - p.peer_cost);  // exact boundary
        CHECK(!check_dominance(build_enforcement_game(p, 1), peer, 0, 1));
        p.deposit = p.value - (p.peer_pay - p.peer_cost) + Money::micro(1);
        CHECK(check_dominance(build_enforcement_game(p, 1), peer, 0, 1));
    }
    SUBCASE("an action never dominates itself") {
        GameTree tree = build_enforcement_game(p, 1);
        CHECK(!check_dominance(tree, recipient, 1, 1));
    }
}

TEST_CASE("all four type profiles keep the honest equilibrium") {
    VariantReport report = analyze_bayesian_variants(baseline_params(), 1);
    REQUIRE(report.variants.size() == 4);
    CHECK(report.honest_in_all);
    for (const auto& v : report.variants) {
        CHECK(v.honest_is_equilibrium);
        CHECK(v.honest_unique);
    }
}

TEST_CASE("random parameter draws confirm the equilibrium structure") {
    Rng rng(404);
    for (int draw = 0; draw < 40; ++draw) {
        GameParams p;
        p.value = Money::micro(static_cast<std::int64_t>(rng.below(5'000'000)));
        p.deposit = p.value + Money::micro(2 + static_cast<std::int64_t>(rng.below(3'000'000)));
        p.peer_cost = Money::micro(static_cast<std::int64_t>(rng.below(50'000)));
        p.peer_pay = p.peer_cost + Money::micro(1 + static_cast<std::int64_t>(rng.below(100'000)));
        p.award = Money::micro(1);
        GameTree tree = build_enforcement_game(p, 1 + static_cast<int>(draw % 2));
        auto equilibria = enumerate_nash(tree);
        REQUIRE(equilibria.size() == 1);
        CHECK(equilibria[0].all_honest());
    }
}

TEST_CASE("the bribery game always ends in reject and report") {
    GameParams p = baseline_params();
    SUBCASE("zero bribe") {
        BriberyReport r = analyze_release_bribery(p, Money{});
        CHECK(r.adversary_reports);
        CHECK(!r.peer_accepts);
        CHECK(r.equilibrium_reject_report);
    }
    SUBCASE("any bribe below the deposit is refused") {
        for (int i = 0; i < 20; ++i) {
            Money bribe = Money::micro(p.deposit.units() * i / 20);
            BriberyReport r = analyze_release_bribery(p, bribe);
            CAPTURE(bribe.to_eth());
            CHECK(r.equilibrium_reject_report);
        }
    }
    SUBCASE("frozen reference numbers line up") {
        Money bribe = Money::eth(1);
        BriberyReport r = analyze_release_bribery(p, bribe);
        CHECK(r.peer_accept_reported == bribe - p.deposit);           // 1 - 3.6
        CHECK(r.adversary_report == p.value + p.award - bribe);       // 3 + 0.3 - 1
        CHECK(r.peer_accept_unreported == bribe + p.peer_pay - p.peer_cost);
    }
}

TEST_CASE("the dispute game deters drops exactly when d_s > v + a") {
    SUBCASE("baseline parameters deter") {
        DisputeReport r = analyze_drop_dispute(baseline_params());
        CHECK(r.params_ok);
        CHECK(r.reporting_dominant);
        CHECK(r.no_drop_equilibrium);
        CHECK(r.second_peer_drop_report == Money::parse_eth("-0.3"));  // 3 + 0.3 - 3.6
    }
    SUBCASE("a deposit inside v + a leaves a profitable self-report") {
        GameParams p = baseline_params();
        p.deposit = Money::parse_eth("3.2");
        DisputeReport r = analyze_drop_dispute(p);
        CHECK(!r.params_ok);
        CHECK(!r.no_drop_equilibrium);
        CHECK(r.second_peer_drop_report > Money{});
        CHECK(!r.violation.empty());
    }
    SUBCASE("zero value still deters") {
        GameParams p = baseline_params();
        p.value = Money{};
        p.deposit = Money::eth(1);
        p.award = Money::parse_eth("0.1");
        DisputeReport r = analyze_drop_dispute(p);
        CHECK(r.no_drop_equilibrium);
    }
}
