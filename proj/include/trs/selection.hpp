#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trs/hash.hpp"
#include "trs/money.hpp"
#include "trs/timewin.hpp"

namespace trs {

struct RegisteredWindow {
    std::string owner;
    TimeWindow window;
    Money unfrozen_deposit;
    TimePoint registered_at = 0;
    Bytes public_key;
};

struct SelectionRequest {
    TimeWindow storage;                 // [t_s, t_r)
    std::int64_t transfer_hours = 1;    // handoff buffer between adjacent hops
    Money required_deposit;
    TimePoint registration_deadline = 0;  // only windows registered strictly before qualify
};

// One selected hop. The service segment always begins at the window's own
// start hour (deposits unfreeze soonest that way) and runs until the next
// hop's start plus the transfer buffer; the last hop runs to t_r + transfer.
struct RouteHop {
    std::string owner;
    TimeWindow window;
    TimeWindow segment;
};

struct RoutePlan {
    std::vector<RouteHop> hops;  // sender-side hop first

    std::size_t size() const { return hops.size(); }
    bool empty() const { return hops.empty(); }
};

// Backward greedy cover: starting from the point t_r + transfer, repeatedly
// pick the eligible window with the earliest start (ties broken by owner id)
// until the storage start is covered. Minimizes the number of hops; throws
// NoFeasibleRoute when a round has no eligible window or cannot advance.
RoutePlan select_peers(std::span<const RegisteredWindow> windows, const SelectionRequest& req);

// Exact minimum hop count by breadth-first search over the window chain
// graph. Independent of the greedy path; used as the optimality oracle.
int min_hop_count(std::span<const RegisteredWindow> windows, const SelectionRequest& req);

// Deterministic random instance: window starts follow an exponential law
// (resampled into the horizon), lengths a clamped normal law.
std::vector<RegisteredWindow> generate_instance(std::uint64_t seed, int count,
                                                std::int64_t horizon_hours,
                                                double mean_start_hours = 300.0,
                                                double mean_length_hours = 15.0,
                                                double std_length_hours = 5.0,
                                                Money deposit = Money::eth(5));

// Line format: owner,start_hour,end_hour,deposit_eth,registered_at
std::string format_instance(std::span<const RegisteredWindow> windows);
std::vector<RegisteredWindow> parse_instance(const std::string& text);

}  // namespace trs
