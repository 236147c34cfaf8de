#pragma once

#include <map>
#include <string>
#include <vector>

#include "trs/account.hpp"
#include "trs/money.hpp"

namespace trs {

struct AccountState {
    Role role = Role::external;
    Money spendable;
    Money frozen;
};

struct InflowRecord {
    std::string account;
    Money amount;
    std::string reason;
};

// Global balance book. Every unit is in exactly one of four buckets:
// account spendable, account frozen, contract escrow, or the locked pool.
// Units enter only through recorded external inflows (account funding is
// itself an inflow), so conservation is checkable after any operation:
//
//   sum(spendable) + sum(frozen) + escrow + locked == sum(inflows)
//
// The locked pool only grows; nothing can be withdrawn from it.
// Single writer per instance; copies are independent snapshots.
class Ledger {
public:
    void open_account(const AccountId& id, Money initial);

    bool has_account(const std::string& name) const { return accounts_.count(name) != 0; }
    const AccountState& account(const std::string& name) const;
    Money spendable(const std::string& name) const { return account(name).spendable; }
    Money frozen(const std::string& name) const { return account(name).frozen; }
    Money holdings(const std::string& name) const;

    void transfer(const std::string& from, const std::string& to, Money amount);
    void freeze(const std::string& name, Money amount);
    void unfreeze(const std::string& name, Money amount);
    void record_inflow(const std::string& name, Money amount, const std::string& reason);

    // escrow and confiscation paths used by the contract
    void spendable_to_escrow(const std::string& from, Money amount);
    void escrow_to_spendable(const std::string& to, Money amount);
    void frozen_to_spendable_of(const std::string& from, const std::string& to, Money amount);
    void frozen_to_escrow(const std::string& from, Money amount);
    void frozen_to_locked(const std::string& from, Money amount);
    void escrow_to_locked(Money amount);

    Money escrow() const { return escrow_; }
    Money locked_pool() const { return locked_pool_; }
    Money total_supply() const;
    Money inflow_total() const;
    bool conserved() const { return total_supply() == inflow_total(); }

    const std::vector<InflowRecord>& inflows() const { return inflows_; }
    const std::map<std::string, AccountState>& accounts() const { return accounts_; }

private:
    AccountState& mut(const std::string& name);
    void take_spendable(const std::string& name, Money amount);
    void take_frozen(const std::string& name, Money amount);

    std::map<std::string, AccountState> accounts_;
    Money escrow_;
    Money locked_pool_;
    std::vector<InflowRecord> inflows_;
};

}  // namespace trs
