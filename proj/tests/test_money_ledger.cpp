#include "doctest.h"

#include "trs/errors.hpp"
#include "trs/ledger.hpp"
#include "trs/rng.hpp"

using namespace trs;

TEST_CASE("money parses and renders fixed-point ETH exactly") {
    CHECK(Money::parse_eth("3.6").units() == 3'600'000);
    CHECK(Money::parse_eth("0.000001").units() == 1);
    CHECK(Money::parse_eth("-0.128").units() == -128'000);
    CHECK(Money::parse_eth("5").units() == 5'000'000);
    CHECK(Money::parse_eth("3.6").to_eth() == "3.600000");
    CHECK(Money::parse_eth("-0.128").to_eth() == "-0.128000");
    CHECK(Money::micro(0).to_eth() == "0.000000");
    CHECK_THROWS_AS(Money::parse_eth("1.2345678"), Error);  // finer than a base unit
    CHECK_THROWS_AS(Money::parse_eth("x"), Error);

    // representation round-trip over random amounts
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        auto units = static_cast<std::int64_t>(rng.below(10'000'000'000ULL));
        Money m = Money::micro(units);
        CHECK(Money::parse_eth(m.to_eth()) == m);
    }
}

TEST_CASE("factor scaling rounds half to even") {
    CHECK(scale_by_millionths(Money::eth(3), 1'200'000) == Money::parse_eth("3.6"));
    CHECK(scale_by_millionths(Money::eth(3), 100'000) == Money::parse_eth("0.3"));
    CHECK(scale_by_millionths(Money::eth(1), 1'200'000) == Money::parse_eth("1.2"));
    // exact .5 micro ties land on the even unit
    CHECK(scale_by_millionths(Money::micro(1), 500'000).units() == 0);
    CHECK(scale_by_millionths(Money::micro(3), 500'000).units() == 2);
    CHECK(scale_by_millionths(Money::micro(5), 500'000).units() == 2);
}

namespace {

Ledger two_account_ledger() {
    Ledger ledger;
    ledger.open_account({"A", Role::peer}, Money::eth(5));
    ledger.open_account({"B", Role::peer}, Money::eth(5));
    return ledger;
}

}  // namespace

TEST_CASE("transfer moves spendable balance and conserves the total") {
    Ledger ledger = two_account_ledger();

    SUBCASE("zero transfer leaves the ledger unchanged") {
        ledger.transfer("A", "B", Money{});
        CHECK(ledger.spendable("A") == Money::eth(5));
        CHECK(ledger.spendable("B") == Money::eth(5));
        CHECK(ledger.conserved());
    }
    SUBCASE("plain transfer") {
        ledger.transfer("A", "B", Money::eth(3));
        CHECK(ledger.spendable("A") == Money::eth(2));
        CHECK(ledger.spendable("B") == Money::eth(8));
        CHECK(ledger.conserved());
    }
    SUBCASE("overdraft is rejected and nothing moves") {
        CHECK_THROWS_AS(ledger.transfer("A", "B", Money::eth(6)), InsufficientFunds);
        CHECK(ledger.spendable("A") == Money::eth(5));
        CHECK(ledger.spendable("B") == Money::eth(5));
        CHECK(ledger.conserved());
    }
}

TEST_CASE("freeze and unfreeze move funds between states of one account") {
    Ledger ledger = two_account_ledger();
    ledger.freeze("A", Money::parse_eth("3.6"));
    CHECK(ledger.spendable("A") == Money::parse_eth("1.4"));
    CHECK(ledger.frozen("A") == Money::parse_eth("3.6"));
    CHECK(ledger.holdings("A") == Money::eth(5));

    ledger.unfreeze("A", Money::parse_eth("3.6"));
    CHECK(ledger.spendable("A") == Money::eth(5));
    CHECK(ledger.frozen("A") == Money{});

    CHECK_THROWS_AS(ledger.freeze("A", Money::eth(6)), InsufficientFunds);
    CHECK_THROWS_AS(ledger.unfreeze("A", Money::micro(1)), InsufficientFrozen);
    CHECK(ledger.conserved());
}

TEST_CASE("inflows are the only source of new units") {
    Ledger ledger = two_account_ledger();
    Money before = ledger.total_supply();
    ledger.record_inflow("A", Money::eth(3), "release-value");
    CHECK(ledger.spendable("A") == Money::eth(8));
    CHECK(ledger.total_supply() == before + Money::eth(3));
    CHECK(ledger.conserved());
    CHECK_THROWS_AS(ledger.record_inflow("A", Money{}, "nothing"), Error);
}

TEST_CASE("conservation holds through random operation sequences") {
    Rng rng(2024);
    for (int round = 0; round < 50; ++round) {
        Ledger ledger;
        const std::vector<std::string> names{"a", "b", "c", "d"};
        for (const auto& n : names)
            ledger.open_account({n, Role::peer},
                                Money::micro(static_cast<std::int64_t>(rng.below(10'000'000))));
        for (int step = 0; step < 200; ++step) {
            const auto& from = names[rng.below(names.size())];
            const auto& to = names[rng.below(names.size())];
            Money amount = Money::micro(static_cast<std::int64_t>(rng.below(2'000'000)));
            try {
                switch (rng.below(7)) {
                    case 0: ledger.transfer(from, to, amount); break;
                    case 1: ledger.freeze(from, amount); break;
                    case 2: ledger.unfreeze(from, amount); break;
                    case 3: ledger.record_inflow(from, amount + Money::micro(1), "test"); break;
                    case 4: ledger.spendable_to_escrow(from, amount); break;
                    case 5: ledger.escrow_to_spendable(to, amount); break;
                    case 6: ledger.frozen_to_locked(from, amount); break;
                }
            } catch (const Error&) {
                // rejected operations must leave the ledger untouched
            }
            REQUIRE(ledger.conserved());
        }
    }
}

TEST_CASE("frozen funds only leave through unfreeze or confiscation") {
    Ledger ledger = two_account_ledger();
    ledger.freeze("A", Money::eth(4));
    CHECK_THROWS_AS(ledger.transfer("A", "B", Money::eth(2)), InsufficientFunds);
    ledger.frozen_to_locked("A", Money::eth(1));
    CHECK(ledger.frozen("A") == Money::eth(3));
    CHECK(ledger.locked_pool() == Money::eth(1));
    ledger.frozen_to_spendable_of("A", "B", Money::eth(1));
    CHECK(ledger.frozen("A") == Money::eth(2));
    CHECK(ledger.spendable("B") == Money::eth(6));
    CHECK(ledger.conserved());
}
