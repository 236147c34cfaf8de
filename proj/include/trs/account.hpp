#pragma once

#include <compare>
#include <string>

namespace trs {

enum class Role { sender, recipient, peer, external };

std::string role_name(Role role);

// Identity of a participant. Stands in for an externally owned account;
// uniqueness within a ledger is enforced at account creation.
struct AccountId {
    std::string name;
    Role role = Role::external;

    friend bool operator==(const AccountId& a, const AccountId& b) { return a.name == b.name; }
    friend auto operator<=>(const AccountId& a, const AccountId& b) { return a.name <=> b.name; }
};

}  // namespace trs
