#include "trs/contract.hpp"

#include <algorithm>
#include <sstream>

#include "trs/errors.hpp"

namespace trs {

std::string status_name(ServiceStatus s) {
    switch (s) {
        case ServiceStatus::proposed: return "Proposed";
        case ServiceStatus::active: return "Active";
        case ServiceStatus::rejected: return "Rejected";
        case ServiceStatus::completed: return "Completed";
        case ServiceStatus::terminated_guilty: return "TerminatedGuilty";
        case ServiceStatus::dispute_closed: return "DisputeClosed";
    }
    return "?";
}

std::string EventRecord::to_line() const {
    std::ostringstream os;
    os << "t=" << time << " sub=" << sub << " fn=" << fn << " caller=" << caller
       << " args=" << (args.empty() ? "-" : args) << " status=" << status_before << "->"
       << status_after << " delta=" << (ledger_delta.empty() ? "-" : ledger_delta);
    return os.str();
}

// ---------------------------------------------------------------------------
// schedule and payments

std::vector<HopSchedule> build_schedule(const ServicePlan& plan) {
    const auto& hops = plan.route.hops;
    const std::int64_t tt = plan.transfer_hours;
    const TimePoint t_s = plan.setup_time, t_r = plan.release_time;
    if (t_s >= t_r) throw MalformedSubmission("storage window is empty");
    if (tt < 1) throw MalformedSubmission("transfer period must be at least one hour");

    std::vector<HopSchedule> out(hops.size());
    for (std::size_t i = 0; i < hops.size(); ++i) {
        const RouteHop& hop = hops[i];
        TimePoint expect_end =
            i + 1 < hops.size() ? hops[i + 1].segment.begin + tt : t_r + tt;
        if (hop.segment.begin != hop.window.begin)
            throw MalformedSubmission("segment must start at the window start");
        if (hop.segment.end != expect_end)
            throw MalformedSubmission("segments must chain with the transfer buffer");
        if (hop.window.end < hop.segment.end)
            throw MalformedSubmission("window ends before its segment");
        if (i == 0) {
            if (hop.segment.begin > t_s)
                throw MalformedSubmission("first hop must cover the storage start");
        } else if (hop.segment.begin <= t_s) {
            throw MalformedSubmission("only the first hop may straddle the storage start");
        }
        HopSchedule sched;
        sched.segment = hop.segment;
        TimePoint start = std::max(hop.segment.begin, t_s);
        sched.d1 = start + tt;
        sched.d2 = hop.segment.end - tt;
        sched.d3 = hop.segment.end;
        if (!(sched.d1 <= sched.d2 && sched.d2 <= sched.d3))
            throw MalformedSubmission("hop too short for its deadlines");
        sched.pay_first_hour = start - t_s + 1;
        sched.pay_last_hour = sched.d2 - t_s;
        out[i] = sched;
    }
    return out;
}

std::vector<Money> hop_payments(const ServicePlan& plan, const std::vector<HopSchedule>& schedule) {
    if (plan.payment_override) {
        if (plan.payment_override->size() != schedule.size())
            throw MalformedSubmission("payment override does not match the hop count");
        return *plan.payment_override;
    }
    std::vector<Money> out;
    out.reserve(schedule.size());
    for (const auto& hop : schedule)
        out.push_back(per_peer_payment(plan.value, hop.pay_first_hour, hop.pay_last_hour,
                                       plan.pricing));
    return out;
}

// ---------------------------------------------------------------------------
// event capture

struct Contract::EventScope {
    EventScope(Contract& c, const CallCtx& ctx, const char* fn, std::string args, int service_id)
        : contract(c), service_id(service_id) {
        contract.order_guard(ctx);
        rec.time = ctx.now;
        rec.sub = ctx.sub;
        rec.fn = fn;
        rec.caller = ctx.caller;
        rec.args = std::move(args);
        rec.status_before = rec.status_after = status();
        for (const auto& [name, st] : contract.ledger_.accounts())
            before[name] = st.spendable + st.frozen;
        escrow_before = contract.ledger_.escrow();
        locked_before = contract.ledger_.locked_pool();
        inflows_before = contract.ledger_.inflows().size();
    }

    ~EventScope() {
        if (std::uncaught_exceptions()) return;  // failed calls do not commit events
        rec.status_after = status();
        // deltas record pure redistributions; inflows are journaled separately
        std::map<std::string, Money> inflow_during;
        const auto& inflows = contract.ledger_.inflows();
        for (std::size_t i = inflows_before; i < inflows.size(); ++i)
            inflow_during[inflows[i].account] += inflows[i].amount;
        std::ostringstream os;
        bool first = true;
        auto emit = [&](const std::string& name, Money delta) {
            if (delta.is_zero()) return;
            if (!first) os << ',';
            first = false;
            os << name << ':' << (delta > Money{} ? "+" : "") << delta.to_eth();
        };
        for (const auto& [name, st] : contract.ledger_.accounts()) {
            Money prev = before.count(name) ? before[name] : Money{};
            Money inflow = inflow_during.count(name) ? inflow_during[name] : Money{};
            emit(name, st.spendable + st.frozen - prev - inflow);
        }
        emit("escrow", contract.ledger_.escrow() - escrow_before);
        emit("locked", contract.ledger_.locked_pool() - locked_before);
        rec.ledger_delta = os.str();
        contract.events_.push_back(std::move(rec));
    }

    std::string status() const {
        if (service_id < 0 || service_id >= static_cast<int>(contract.services_.size()))
            return "-";
        return status_name(contract.services_[static_cast<std::size_t>(service_id)].status);
    }

    Contract& contract;
    int service_id;
    EventRecord rec;
    std::map<std::string, Money> before;
    Money escrow_before, locked_before;
    std::size_t inflows_before = 0;
};

Contract::Contract(Ledger ledger, CryptoSuite suite)
    : ledger_(std::move(ledger)), suite_(std::move(suite)) {}

void Contract::order_guard(const CallCtx& ctx) {
    if (ctx.now < last_time_ || (ctx.now == last_time_ && ctx.sub < last_sub_))
        throw OutOfOrderCall("call at t=" + std::to_string(ctx.now) +
                             " behind t=" + std::to_string(last_time_));
    last_time_ = ctx.now;
    last_sub_ = ctx.sub;
}

Service& Contract::svc(int service_id) {
    if (service_id < 0 || service_id >= static_cast<int>(services_.size()))
        throw UnknownService("no service " + std::to_string(service_id));
    return services_[static_cast<std::size_t>(service_id)];
}

const Service& Contract::service(int service_id) const {
    return const_cast<Contract*>(this)->svc(service_id);
}

const PeerRecord& Contract::peer(const std::string& name) const {
    auto it = peers_.find(name);
    if (it == peers_.end()) throw UnknownAccount("peer not registered: " + name);
    return it->second;
}

std::string Contract::party_at(const Service& s, int pos) const {
    if (pos == 0) return s.plan.sender;
    int k = static_cast<int>(s.plan.route.hops.size());
    if (pos >= 1 && pos <= k) return s.plan.route.hops[static_cast<std::size_t>(pos - 1)].owner;
    if (pos == k + 1) return s.plan.recipient;
    throw NotOnRoute("no party at position " + std::to_string(pos));
}

// ---------------------------------------------------------------------------
// registration

const PeerRecord& Contract::new_peer(const CallCtx& ctx, std::vector<TimeWindow> windows,
                                     Bytes public_key, Money deposit) {
    EventScope ev(*this, ctx, "newPeer", "deposit=" + deposit.to_eth(), -1);
    if (deposit <= Money{}) throw ZeroDeposit("registration requires a positive deposit");
    if (peers_.count(ctx.caller)) throw AlreadyRegistered(ctx.caller);
    for (const auto& w : windows) w.require_valid();
    if (ledger_.spendable(ctx.caller) < deposit)
        throw InsufficientFunds(ctx.caller + " cannot back the declared deposit");
    PeerRecord rec{ctx.caller, std::move(windows), std::move(public_key), ctx.now, deposit};
    return peers_.emplace(ctx.caller, std::move(rec)).first->second;
}

void Contract::ensure_wallet(const std::string& peer_name) {
    std::string wallet = "ext:" + peer_name;
    if (!ledger_.has_account(wallet))
        ledger_.open_account(AccountId{wallet, Role::external}, Money{});
}

void Contract::update_balance_withdraw(const CallCtx& ctx, Money amount) {
    EventScope ev(*this, ctx, "updateBalance", "withdraw=" + amount.to_eth(), -1);
    if (!peers_.count(ctx.caller)) throw NotOwner(ctx.caller + " is not registered");
    if (amount.is_negative() || ledger_.spendable(ctx.caller) < amount)
        throw WithdrawExceedsUnfrozen("withdrawal exceeds the unfrozen deposit");
    ensure_wallet(ctx.caller);
    ledger_.transfer(ctx.caller, "ext:" + ctx.caller, amount);
}

void Contract::update_balance_deposit(const CallCtx& ctx, Money amount) {
    EventScope ev(*this, ctx, "updateBalance", "deposit=" + amount.to_eth(), -1);
    if (!peers_.count(ctx.caller)) throw NotOwner(ctx.caller + " is not registered");
    ensure_wallet(ctx.caller);
    ledger_.transfer("ext:" + ctx.caller, ctx.caller, amount);
}

void Contract::update_window(const CallCtx& ctx, std::vector<TimeWindow> windows) {
    EventScope ev(*this, ctx, "updateWindow", "n=" + std::to_string(windows.size()), -1);
    auto it = peers_.find(ctx.caller);
    if (it == peers_.end()) throw NotOwner(ctx.caller + " is not registered");
    for (const auto& w : windows) w.require_valid();
    // Jobs assigned before the modification stay pinned: schedules live in
    // the service records and are not touched here.
    it->second.windows = std::move(windows);
}

void Contract::update_pub_key(const CallCtx& ctx, Bytes public_key) {
    EventScope ev(*this, ctx, "updatePubKey", "", -1);
    auto it = peers_.find(ctx.caller);
    if (it == peers_.end()) throw NotOwner(ctx.caller + " is not registered");
    it->second.public_key = std::move(public_key);
}

std::vector<RegisteredWindow> Contract::registry_windows() const {
    std::vector<RegisteredWindow> out;
    for (const auto& [name, rec] : peers_) {
        for (const auto& w : rec.windows)
            out.push_back(RegisteredWindow{name, w, ledger_.spendable(name), rec.registered_at,
                                           rec.public_key});
    }
    return out;
}

// ---------------------------------------------------------------------------
// setup

int Contract::sender_sign(const CallCtx& ctx, ServicePlan plan, Money payment) {
    int id = static_cast<int>(services_.size());
    EventScope ev(*this, ctx, "senderSign", "p=" + payment.to_eth(), -1);
    if (ctx.caller != plan.sender) throw WrongCaller("only the sender signs the draft");
    if (plan.value.is_negative()) throw ParamViolation("data value cannot be negative");
    if (plan.value.is_zero() && !plan.deposit_override)
        throw ParamViolation("a zero-value service needs an explicit deposit");
    plan.pricing.validate();
    for (std::size_t i = 0; i < plan.route.hops.size(); ++i) {
        const auto& owner = plan.route.hops[i].owner;
        if (owner == plan.sender || owner == plan.recipient)
            throw MalformedSubmission("route peers must be distinct from the endpoints");
        for (std::size_t j = i + 1; j < plan.route.hops.size(); ++j)
            if (owner == plan.route.hops[j].owner)
                throw MalformedSubmission("peer " + owner + " appears twice on the route");
    }

    if (plan.deposit_override) {
        Money award = plan.value.is_zero() ? Money{} : report_award(plan.value, plan.pricing);
        if (*plan.deposit_override <= Money{} || award >= *plan.deposit_override)
            throw ParamViolation("deposit must be positive and exceed the report award");
    }

    Service s;
    s.id = id;
    s.schedule = build_schedule(plan);
    s.payments = hop_payments(plan, s.schedule);
    s.deposit_each = plan.deposit_override ? *plan.deposit_override
                                           : required_deposit(plan.value, plan.pricing);
    for (const auto& p : s.payments) s.escrow_target += p;
    s.recipient_deadline = plan.release_time + plan.transfer_hours;
    s.cert.resize(plan.route.hops.size() + 1);
    s.whisper.resize(plan.route.hops.size());
    s.whisper_envelopes.resize(plan.route.hops.size());
    s.plan = std::move(plan);
    s.sender_signed = true;
    s.paid_sender = payment;

    ledger_.spendable_to_escrow(ctx.caller, payment);
    services_.push_back(std::move(s));
    ev.service_id = id;
    return id;
}

void Contract::recipient_sign(const CallCtx& ctx, int service_id, Money payment) {
    EventScope ev(*this, ctx, "recipientSign", "p=" + payment.to_eth(), service_id);
    Service& s = svc(service_id);
    if (ctx.caller != s.plan.recipient) throw WrongCaller("only the recipient signs");
    if (s.status != ServiceStatus::proposed) throw ServiceNotActive("service already set up");
    if (s.recipient_signed) throw WrongCaller("recipient already signed");
    ledger_.spendable_to_escrow(ctx.caller, payment);
    s.recipient_signed = true;
    s.paid_recipient = payment;
}

bool Contract::setup(const CallCtx& ctx, int service_id) {
    EventScope ev(*this, ctx, "setup", "", service_id);
    Service& s = svc(service_id);
    if (ctx.caller != s.plan.sender) throw WrongCaller("only the sender completes setup");
    if (s.status != ServiceStatus::proposed) throw ServiceNotActive("service already set up");
    if (!s.sender_signed || !s.recipient_signed)
        throw MissingSignature("both signatures are required before setup");

    std::string reason;
    if (s.paid_sender <= s.deposit_each + s.escrow_target)
        reason = "sender payment does not exceed deposit plus remuneration";
    else if (s.paid_recipient <= s.deposit_each)
        reason = "recipient payment does not exceed deposit";
    if (reason.empty()) {
        for (const auto& hop : s.plan.route.hops) {
            if (!peers_.count(hop.owner)) {
                reason = "unregistered peer " + hop.owner;
                break;
            }
            if (ledger_.spendable(hop.owner) < s.deposit_each) {
                reason = "peer " + hop.owner + " lacks unfrozen deposit";
                break;
            }
        }
    }

    if (!reason.empty()) {
        ledger_.escrow_to_spendable(s.plan.sender, s.paid_sender);
        ledger_.escrow_to_spendable(s.plan.recipient, s.paid_recipient);
        s.status = ServiceStatus::rejected;
        s.reject_reason = reason;
        return false;
    }

    // refund the excess over the retained deposit + remuneration
    ledger_.escrow_to_spendable(s.plan.sender, s.paid_sender);
    ledger_.freeze(s.plan.sender, s.deposit_each);
    ledger_.spendable_to_escrow(s.plan.sender, s.escrow_target);
    ledger_.escrow_to_spendable(s.plan.recipient, s.paid_recipient);
    ledger_.freeze(s.plan.recipient, s.deposit_each);
    for (const auto& hop : s.plan.route.hops) ledger_.freeze(hop.owner, s.deposit_each);
    s.status = ServiceStatus::active;
    return true;
}

// ---------------------------------------------------------------------------
// enforcement

void Contract::set_cert(const CallCtx& ctx, int service_id, std::vector<Bytes> commitments,
                        Bytes innermost_hash, WhisperEnvelope sender_envelope) {
    EventScope ev(*this, ctx, "setCert", "n=" + std::to_string(commitments.size()), service_id);
    Service& s = svc(service_id);
    if (ctx.caller != s.plan.sender) throw WrongCaller("only the sender submits commitments");
    if (s.status != ServiceStatus::active) throw ServiceNotActive("service is not active");
    if (commitments.size() != s.plan.route.hops.size() + 1)
        throw MalformedSubmission("expected one commitment per hop plus the recipient");
    if (s.commitments_set) throw MalformedSubmission("commitments already submitted");
    // A late submission is recorded as-is; the next verification treats the
    // missed deadline as a drop by the sender.
    s.commitments = std::move(commitments);
    s.innermost_hash = std::move(innermost_hash);
    s.sender_envelope = std::move(sender_envelope);
    s.commitments_set = true;
    s.commitments_at = ctx.now;
}

void Contract::verify_cert(const CallCtx& ctx, int service_id, int hop, const Bytes& nonce) {
    EventScope ev(*this, ctx, "verifyCert", "hop=" + std::to_string(hop), service_id);
    Service& s = svc(service_id);
    int k = static_cast<int>(s.plan.route.hops.size());
    if (hop < 1 || hop > k + 1) throw NotOnRoute("no hop " + std::to_string(hop));
    if (ctx.caller != party_at(s, hop)) throw WrongCaller("certificate belongs to another hop");
    if (s.status != ServiceStatus::active) throw ServiceNotActive("service is not active");
    auto& slot = s.cert[static_cast<std::size_t>(hop - 1)];
    if (slot.present) return;  // first submission wins; repeats are no-ops
    slot.present = true;
    slot.at = ctx.now;
    // Mismatch and lateness are recorded outcomes, surfaced by verification.
    slot.matched = s.commitments_set &&
                   suite_.digest(nonce) == s.commitments[static_cast<std::size_t>(hop - 1)];
}

void Contract::set_whisper_key(const CallCtx& ctx, int service_id, int hop,
                               WhisperEnvelope envelope) {
    EventScope ev(*this, ctx, "setWhisperKey", "hop=" + std::to_string(hop), service_id);
    Service& s = svc(service_id);
    int k = static_cast<int>(s.plan.route.hops.size());
    if (hop < 1 || hop > k) throw NotOnRoute("no hop " + std::to_string(hop));
    if (ctx.caller != party_at(s, hop)) throw WrongCaller("whisper key belongs to another hop");
    if (s.status != ServiceStatus::active) throw ServiceNotActive("service is not active");
    auto& slot = s.whisper[static_cast<std::size_t>(hop - 1)];
    if (slot.present) return;
    slot.present = true;
    slot.matched = true;
    slot.at = ctx.now;
    s.whisper_envelopes[static_cast<std::size_t>(hop - 1)] = std::move(envelope);
}

std::vector<Contract::Requirement> Contract::requirements(const Service& s) const {
    std::vector<Requirement> reqs;
    const TimePoint tt = s.plan.transfer_hours;
    reqs.push_back({s.plan.setup_time + tt, 0, s.plan.sender, s.commitments_set &&
                    s.commitments_at < s.plan.setup_time + tt, "commitments"});
    for (std::size_t i = 0; i < s.schedule.size(); ++i) {
        const auto& sched = s.schedule[i];
        const auto& owner = s.plan.route.hops[i].owner;
        const auto& c = s.cert[i];
        reqs.push_back({sched.d1, static_cast<int>(i + 1), owner,
                        c.present && c.matched && c.at < sched.d1, "certificate"});
        const auto& w = s.whisper[i];
        reqs.push_back({sched.d2, static_cast<int>(i + 1), owner,
                        w.present && w.at < sched.d2, "whisper-key"});
    }
    const auto& rc = s.cert.back();
    reqs.push_back({s.recipient_deadline, static_cast<int>(s.schedule.size() + 1),
                    s.plan.recipient,
                    rc.present && rc.matched && rc.at < s.recipient_deadline, "certificate"});
    std::stable_sort(reqs.begin(), reqs.end(), [](const Requirement& a, const Requirement& b) {
        return a.deadline != b.deadline ? a.deadline < b.deadline : a.path_pos < b.path_pos;
    });
    return reqs;
}

bool Contract::verification(const CallCtx& ctx, int service_id) {
    EventScope ev(*this, ctx, "verification", "", service_id);
    Service& s = svc(service_id);
    int k = static_cast<int>(s.plan.route.hops.size());
    bool on_route = ctx.caller == s.plan.recipient;
    for (int i = 1; i <= k && !on_route; ++i) on_route = ctx.caller == party_at(s, i);
    if (!on_route) throw WrongCaller("verification is for route participants");
    if (s.status == ServiceStatus::completed) return true;
    if (s.status != ServiceStatus::active) return false;

    auto reqs = requirements(s);
    bool all_satisfied = true;
    for (const auto& r : reqs) {
        if (r.satisfied) continue;
        all_satisfied = false;
        if (r.deadline <= ctx.now) {
            settle_guilty(s, r.owner);
            return false;
        }
    }
    if (all_satisfied) settle_success(s);
    return true;
}

// ---------------------------------------------------------------------------
// settlement

void Contract::pay_peers_except(Service& s, const std::vector<std::string>& excluded) {
    Money paid;
    for (std::size_t i = 0; i < s.plan.route.hops.size(); ++i) {
        const auto& owner = s.plan.route.hops[i].owner;
        if (std::find(excluded.begin(), excluded.end(), owner) != excluded.end()) continue;
        ledger_.escrow_to_spendable(owner, s.payments[i]);
        paid += s.payments[i];
    }
    // unused shares and any residue go back to the sender
    Money residue = s.escrow_target - paid;
    if (residue > Money{}) ledger_.escrow_to_spendable(s.plan.sender, residue);
}

void Contract::settle_success(Service& s) {
    ledger_.unfreeze(s.plan.sender, s.deposit_each);
    ledger_.unfreeze(s.plan.recipient, s.deposit_each);
    for (const auto& hop : s.plan.route.hops) ledger_.unfreeze(hop.owner, s.deposit_each);
    pay_peers_except(s, {});
    // the data value is realized by the sender on a successful release
    if (s.plan.value > Money{})
        ledger_.record_inflow(s.plan.sender, s.plan.value, "release-value");
    s.status = ServiceStatus::completed;
}

void Contract::settle_guilty(Service& s, const std::string& guilty) {
    s.guilty = guilty;
    auto handle = [&](const std::string& name) {
        if (name == guilty) {
            if (name == s.plan.sender)
                ledger_.frozen_to_locked(name, s.deposit_each);  // nobody may profit here
            else
                ledger_.frozen_to_spendable_of(name, s.plan.sender, s.deposit_each);
        } else {
            ledger_.unfreeze(name, s.deposit_each);
        }
    };
    handle(s.plan.sender);
    handle(s.plan.recipient);
    for (const auto& hop : s.plan.route.hops) handle(hop.owner);
    pay_peers_except(s, {guilty});
    s.status = ServiceStatus::terminated_guilty;
}

void Contract::settle_release(Service& s, const std::string& reporter) {
    const std::string guilty = s.plan.route.hops.back().owner;
    s.guilty = guilty;
    ledger_.unfreeze(s.plan.sender, s.deposit_each);
    ledger_.unfreeze(s.plan.recipient, s.deposit_each);
    for (const auto& hop : s.plan.route.hops)
        if (hop.owner != guilty) ledger_.unfreeze(hop.owner, s.deposit_each);
    Money award =
        s.plan.value > Money{} ? report_award(s.plan.value, s.plan.pricing) : Money{};
    ledger_.frozen_to_escrow(guilty, award);
    ledger_.frozen_to_spendable_of(guilty, s.plan.sender, s.deposit_each - award);
    s.reserved_award = award;
    s.award_reporter = reporter;
    pay_peers_except(s, {guilty});
    s.status = ServiceStatus::terminated_guilty;
}

void Contract::settle_dispute(Service& s, int reporter_hop) {
    const std::string suspect = party_at(s, reporter_hop - 1);
    const std::string reporter = party_at(s, reporter_hop);
    s.guilty = suspect;
    std::vector<std::string> implicated{s.plan.sender};
    if (suspect != s.plan.sender) implicated.push_back(suspect);
    implicated.push_back(reporter);

    auto implicated_has = [&](const std::string& name) {
        return std::find(implicated.begin(), implicated.end(), name) != implicated.end();
    };
    // the award comes out of the suspect's confiscated deposit, the rest of
    // the confiscations are locked forever
    Money award =
        s.plan.value > Money{} ? report_award(s.plan.value, s.plan.pricing) : Money{};
    for (const auto& name : implicated) {
        if (name == suspect) {
            ledger_.frozen_to_escrow(name, award);
            ledger_.frozen_to_locked(name, s.deposit_each - award);
        } else {
            ledger_.frozen_to_locked(name, s.deposit_each);
        }
    }
    if (!implicated_has(s.plan.recipient)) ledger_.unfreeze(s.plan.recipient, s.deposit_each);
    for (const auto& hop : s.plan.route.hops)
        if (!implicated_has(hop.owner)) ledger_.unfreeze(hop.owner, s.deposit_each);
    s.reserved_award = award;
    s.award_reporter = reporter;
    pay_peers_except(s, implicated);
    s.status = ServiceStatus::dispute_closed;
}

// ---------------------------------------------------------------------------
// reporting

void Contract::release_report(const CallCtx& ctx, int service_id, const Bytes& evidence) {
    EventScope ev(*this, ctx, "releaseReport", "", service_id);
    Service& s = svc(service_id);
    if (s.status != ServiceStatus::active) throw ServiceNotActive("service is not active");
    if (s.plan.route.hops.empty()) throw NotOnRoute("direct service has no routed peers");
    if (ctx.now >= s.plan.release_time) throw TooLate("report must arrive before the release time");
    if (!s.commitments_set || suite_.digest(evidence) != s.innermost_hash)
        throw BadEvidence("evidence does not match the committed ciphertext digest");
    settle_release(s, ctx.caller);
}

Money Contract::release_award(const CallCtx& ctx, int service_id) {
    EventScope ev(*this, ctx, "releaseAward", "", service_id);
    Service& s = svc(service_id);
    if (s.status != ServiceStatus::terminated_guilty || s.reserved_award.is_zero())
        throw NoAward("no release award reserved");
    if (s.award_claimed) throw NoAward("award already claimed");
    if (ctx.caller != s.award_reporter) throw WrongCaller("award belongs to the reporter");
    ledger_.escrow_to_spendable(ctx.caller, s.reserved_award);
    s.award_claimed = true;
    return s.reserved_award;
}

void Contract::drop_report(const CallCtx& ctx, int service_id, int reporter_hop) {
    EventScope ev(*this, ctx, "dropReport", "hop=" + std::to_string(reporter_hop), service_id);
    Service& s = svc(service_id);
    int k = static_cast<int>(s.plan.route.hops.size());
    if (reporter_hop < 1 || reporter_hop > k + 1)
        throw NotOnRoute("reporter must be on the path");
    if (ctx.caller != party_at(s, reporter_hop))
        throw NotOnRoute("only the party after the suspect may report");
    if (s.status != ServiceStatus::active)
        throw DepositAlreadyReleased("the suspect's deposit is no longer frozen");
    settle_dispute(s, reporter_hop);
}

Money Contract::drop_award(const CallCtx& ctx, int service_id) {
    EventScope ev(*this, ctx, "dropAward", "", service_id);
    Service& s = svc(service_id);
    if (s.status != ServiceStatus::dispute_closed || s.reserved_award.is_zero())
        throw NoAward("no dispute award reserved");
    if (s.award_claimed) throw NoAward("award already claimed");
    if (ctx.caller != s.award_reporter) throw WrongCaller("award belongs to the reporter");
    ledger_.escrow_to_spendable(ctx.caller, s.reserved_award);
    s.award_claimed = true;
    return s.reserved_award;
}

}  // namespace trs
