#include "trs/selection.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "trs/errors.hpp"
#include "trs/rng.hpp"

namespace trs {
namespace {

bool eligible_at(const RegisteredWindow& w, TimePoint point, std::int64_t transfer) {
    // strict on both sides: the window must properly straddle point + transfer
    return w.window.begin < point + transfer && w.window.end > point + transfer;
}

std::vector<const RegisteredWindow*> admitted(std::span<const RegisteredWindow> windows,
                                              const SelectionRequest& req) {
    std::vector<const RegisteredWindow*> out;
    for (const auto& w : windows) {
        if (w.registered_at < req.registration_deadline &&
            w.unfrozen_deposit >= req.required_deposit && w.window.valid())
            out.push_back(&w);
    }
    return out;
}

}  // namespace

RoutePlan select_peers(std::span<const RegisteredWindow> windows, const SelectionRequest& req) {
    req.storage.require_valid();
    if (req.transfer_hours < 1) throw Error("transfer period must be at least one hour");

    auto pool = admitted(windows, req);
    std::vector<const RegisteredWindow*> picked;  // recipient-side hop first

    TimePoint current = req.storage.end;  // t_r
    while (true) {
        const RegisteredWindow* best = nullptr;
        for (const auto* w : pool) {
            if (!eligible_at(*w, current, req.transfer_hours)) continue;
            if (std::find(picked.begin(), picked.end(), w) != picked.end()) continue;
            if (!best || w->window.begin < best->window.begin ||
                (w->window.begin == best->window.begin && w->owner < best->owner))
                best = w;
        }
        if (!best) throw NoFeasibleRoute("no window covers hour " +
                                         std::to_string(current + req.transfer_hours));
        picked.push_back(best);
        current = best->window.begin;
        if (current <= req.storage.begin) break;
    }

    RoutePlan plan;
    plan.hops.resize(picked.size());
    for (std::size_t i = 0; i < picked.size(); ++i) {
        const RegisteredWindow& w = *picked[picked.size() - 1 - i];
        TimePoint seg_end = i + 1 < picked.size()
                                ? picked[picked.size() - 2 - i]->window.begin + req.transfer_hours
                                : req.storage.end + req.transfer_hours;
        plan.hops[i] = RouteHop{w.owner, w.window, TimeWindow{w.window.begin, seg_end}};
    }
    return plan;
}

int min_hop_count(std::span<const RegisteredWindow> windows, const SelectionRequest& req) {
    req.storage.require_valid();
    auto pool = admitted(windows, req);

    // BFS layers over "window covers the point left by the previous window".
    std::vector<int> depth(pool.size(), -1);
    std::deque<std::size_t> frontier;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (eligible_at(*pool[i], req.storage.end, req.transfer_hours)) {
            depth[i] = 1;
            if (pool[i]->window.begin <= req.storage.begin) return 1;
            frontier.push_back(i);
        }
    }
    while (!frontier.empty()) {
        std::size_t cur = frontier.front();
        frontier.pop_front();
        TimePoint point = pool[cur]->window.begin;
        for (std::size_t j = 0; j < pool.size(); ++j) {
            if (depth[j] != -1 || !eligible_at(*pool[j], point, req.transfer_hours)) continue;
            depth[j] = depth[cur] + 1;
            if (pool[j]->window.begin <= req.storage.begin) return depth[j];
            frontier.push_back(j);
        }
    }
    throw NoFeasibleRoute("no chain of windows covers the storage interval");
}

std::vector<RegisteredWindow> generate_instance(std::uint64_t seed, int count,
                                                std::int64_t horizon_hours,
                                                double mean_start_hours,
                                                double mean_length_hours,
                                                double std_length_hours, Money deposit) {
    if (count < 0) throw Error("negative window count");
    Rng rng(seed);
    std::vector<RegisteredWindow> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        // exponential start, resampled until inside the horizon
        std::int64_t start = horizon_hours;
        for (int tries = 0; tries < 1024 && start >= horizon_hours; ++tries) {
            double u = rng.unit();
            start = static_cast<std::int64_t>(-mean_start_hours * std::log(1.0 - u));
        }
        if (start >= horizon_hours) start = horizon_hours - 1;
        // normal length via the sum of twelve uniforms (portable, bounded)
        double acc = 0;
        for (int k = 0; k < 12; ++k) acc += rng.unit();
        auto length = static_cast<std::int64_t>(
            std::llround(mean_length_hours + std_length_hours * (acc - 6.0)));
        if (length < 1) length = 1;
        char name[16];
        std::snprintf(name, sizeof name, "p%03d", i + 1);
        out.push_back(RegisteredWindow{name, TimeWindow{start, start + length}, deposit, 0, {}});
    }
    return out;
}

std::string format_instance(std::span<const RegisteredWindow> windows) {
    std::ostringstream os;
    for (const auto& w : windows) {
        os << w.owner << ',' << w.window.begin << ',' << w.window.end << ','
           << w.unfrozen_deposit.to_eth() << ',' << w.registered_at << '\n';
    }
    return os.str();
}

std::vector<RegisteredWindow> parse_instance(const std::string& text) {
    std::vector<RegisteredWindow> out;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string owner, begin, end, deposit, registered;
        if (!std::getline(ls, owner, ',') || !std::getline(ls, begin, ',') ||
            !std::getline(ls, end, ',') || !std::getline(ls, deposit, ',') ||
            !std::getline(ls, registered))
            throw Error("bad instance line " + std::to_string(lineno) + ": " + line);
        RegisteredWindow w;
        w.owner = owner;
        w.window = TimeWindow{std::stoll(begin), std::stoll(end)};
        w.unfrozen_deposit = Money::parse_eth(deposit);
        w.registered_at = std::stoll(registered);
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace trs
