#include "trs/ledger.hpp"

#include "trs/errors.hpp"

namespace trs {

std::string role_name(Role role) {
    switch (role) {
        case Role::sender: return "sender";
        case Role::recipient: return "recipient";
        case Role::peer: return "peer";
        case Role::external: return "external";
    }
    return "?";
}

void Ledger::open_account(const AccountId& id, Money initial) {
    if (initial.is_negative()) throw Error("negative opening balance");
    if (accounts_.count(id.name)) throw DuplicateAccount("account exists: " + id.name);
    accounts_[id.name] = AccountState{id.role, Money{}, Money{}};
    if (!initial.is_zero()) record_inflow(id.name, initial, "genesis");
}

const AccountState& Ledger::account(const std::string& name) const {
    auto it = accounts_.find(name);
    if (it == accounts_.end()) throw UnknownAccount("no such account: " + name);
    return it->second;
}

AccountState& Ledger::mut(const std::string& name) {
    auto it = accounts_.find(name);
    if (it == accounts_.end()) throw UnknownAccount("no such account: " + name);
    return it->second;
}

Money Ledger::holdings(const std::string& name) const {
    const auto& a = account(name);
    return a.spendable + a.frozen;
}

void Ledger::take_spendable(const std::string& name, Money amount) {
    auto& a = mut(name);
    if (a.spendable < amount)
        throw InsufficientFunds(name + " has " + a.spendable.to_eth() + ", needs " + amount.to_eth());
    a.spendable -= amount;
}

void Ledger::take_frozen(const std::string& name, Money amount) {
    auto& a = mut(name);
    if (a.frozen < amount)
        throw InsufficientFrozen(name + " has " + a.frozen.to_eth() + " frozen, needs " + amount.to_eth());
    a.frozen -= amount;
}

void Ledger::transfer(const std::string& from, const std::string& to, Money amount) {
    if (amount.is_negative()) throw Error("negative transfer");
    mut(to);  // fail before any mutation
    take_spendable(from, amount);
    mut(to).spendable += amount;
}

void Ledger::freeze(const std::string& name, Money amount) {
    if (amount.is_negative()) throw Error("negative freeze");
    take_spendable(name, amount);
    mut(name).frozen += amount;
}

void Ledger::unfreeze(const std::string& name, Money amount) {
    if (amount.is_negative()) throw Error("negative unfreeze");
    take_frozen(name, amount);
    mut(name).spendable += amount;
}

void Ledger::record_inflow(const std::string& name, Money amount, const std::string& reason) {
    if (amount <= Money{}) throw Error("inflow must be positive");
    mut(name).spendable += amount;
    inflows_.push_back(InflowRecord{name, amount, reason});
}

void Ledger::spendable_to_escrow(const std::string& from, Money amount) {
    if (amount.is_negative()) throw Error("negative escrow payment");
    take_spendable(from, amount);
    escrow_ += amount;
}

void Ledger::escrow_to_spendable(const std::string& to, Money amount) {
    if (amount.is_negative()) throw Error("negative escrow payout");
    if (escrow_ < amount) throw InsufficientFunds("escrow underflow");
    escrow_ -= amount;
    mut(to).spendable += amount;
}

void Ledger::frozen_to_spendable_of(const std::string& from, const std::string& to, Money amount) {
    mut(to);
    take_frozen(from, amount);
    mut(to).spendable += amount;
}

void Ledger::frozen_to_escrow(const std::string& from, Money amount) {
    take_frozen(from, amount);
    escrow_ += amount;
}

void Ledger::frozen_to_locked(const std::string& from, Money amount) {
    take_frozen(from, amount);
    locked_pool_ += amount;
}

void Ledger::escrow_to_locked(Money amount) {
    if (amount.is_negative()) throw Error("negative lock");
    if (escrow_ < amount) throw InsufficientFunds("escrow underflow");
    escrow_ -= amount;
    locked_pool_ += amount;
}

Money Ledger::total_supply() const {
    Money total = escrow_ + locked_pool_;
    for (const auto& [name, state] : accounts_) total += state.spendable + state.frozen;
    return total;
}

Money Ledger::inflow_total() const {
    Money total;
    for (const auto& rec : inflows_) total += rec.amount;
    return total;
}

}  // namespace trs
