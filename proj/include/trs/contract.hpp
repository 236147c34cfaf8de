#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trs/cipher.hpp"
#include "trs/economics.hpp"
#include "trs/ledger.hpp"
#include "trs/selection.hpp"
#include "trs/whisper.hpp"

namespace trs {

// Every call carries injected logical time plus a sub-tick; the contract is a
// single serialized state machine and rejects out-of-order calls.
struct CallCtx {
    TimePoint now = 0;
    int sub = 0;
    std::string caller;
};

struct PeerRecord {
    std::string account;
    std::vector<TimeWindow> windows;
    Bytes public_key;
    TimePoint registered_at = 0;
    Money declared_deposit;
};

enum class ServiceStatus {
    proposed,
    active,
    rejected,
    completed,
    terminated_guilty,
    dispute_closed,
};

std::string status_name(ServiceStatus s);

// Deadlines for one hop with service segment [start, end):
//   d1 = clamped start + transfer   certificate submitted and verified
//   d2 = end - transfer             whisper key for the successor channel
//   d3 = end                        handoff to the successor complete
// The clamp pins the first hop to the storage start: its window may open
// before the key exists.
struct HopSchedule {
    TimeWindow segment;
    TimePoint d1 = 0, d2 = 0, d3 = 0;
    std::int64_t pay_first_hour = 0, pay_last_hour = 0;  // 1-based within storage
};

struct ServicePlan {
    std::string sender;
    std::string recipient;
    RoutePlan route;
    Money value;
    TimePoint setup_time = 0;
    TimePoint release_time = 0;
    std::int64_t transfer_hours = 1;
    PricingParams pricing;
    // When set, replaces the computed per-hop payments (must match hop count).
    std::optional<std::vector<Money>> payment_override;
    // Analysis affordance: fixes the frozen deposit directly instead of
    // deriving it from the pricing factors.
    std::optional<Money> deposit_override;
};

struct SubmissionSlot {
    bool present = false;
    bool matched = false;  // certificate digest comparison
    TimePoint at = 0;
};

struct Service {
    int id = 0;
    ServicePlan plan;
    Money deposit_each;           // d_s frozen per participant
    std::vector<Money> payments;  // one per hop
    Money escrow_target;          // sum of payments, held until settlement
    std::vector<HopSchedule> schedule;
    TimePoint recipient_deadline = 0;

    bool sender_signed = false;
    bool recipient_signed = false;
    Money paid_sender;
    Money paid_recipient;

    bool commitments_set = false;
    TimePoint commitments_at = 0;
    std::vector<Bytes> commitments;  // hop certificates then recipient
    Bytes innermost_hash;
    std::optional<WhisperEnvelope> sender_envelope;
    std::vector<SubmissionSlot> cert;     // k + 1 (recipient last)
    std::vector<SubmissionSlot> whisper;  // k
    std::vector<WhisperEnvelope> whisper_envelopes;

    ServiceStatus status = ServiceStatus::proposed;
    std::string guilty;
    std::string reject_reason;

    Money reserved_award;
    std::string award_reporter;
    bool award_claimed = false;
};

struct EventRecord {
    TimePoint time = 0;
    int sub = 0;
    std::string fn;
    std::string caller;
    std::string args;
    std::string status_before;
    std::string status_after;
    std::string ledger_delta;

    std::string to_line() const;
};

class Contract {
public:
    Contract(Ledger ledger, CryptoSuite suite);

    const Ledger& ledger() const { return ledger_; }
    Ledger& ledger() { return ledger_; }
    const CryptoSuite& suite() const { return suite_; }

    // --- registration ---
    const PeerRecord& new_peer(const CallCtx& ctx, std::vector<TimeWindow> windows,
                               Bytes public_key, Money deposit);
    void update_balance_withdraw(const CallCtx& ctx, Money amount);
    void update_balance_deposit(const CallCtx& ctx, Money amount);
    void update_window(const CallCtx& ctx, std::vector<TimeWindow> windows);
    void update_pub_key(const CallCtx& ctx, Bytes public_key);

    bool has_peer(const std::string& name) const { return peers_.count(name) != 0; }
    const PeerRecord& peer(const std::string& name) const;
    // Registration list as selection input; unfrozen deposit is the live
    // spendable balance.
    std::vector<RegisteredWindow> registry_windows() const;

    // --- setup ---
    int sender_sign(const CallCtx& ctx, ServicePlan plan, Money payment);
    void recipient_sign(const CallCtx& ctx, int service_id, Money payment);
    // Approves or rejects per the funding and deposit checks. Rejection is an
    // outcome (full refunds, status rejected), not an error.
    bool setup(const CallCtx& ctx, int service_id);

    // --- enforcement ---
    void set_cert(const CallCtx& ctx, int service_id, std::vector<Bytes> commitments,
                  Bytes innermost_hash, WhisperEnvelope sender_envelope);
    // hop in [1, k]; k + 1 submits the recipient certificate
    void verify_cert(const CallCtx& ctx, int service_id, int hop, const Bytes& nonce);
    void set_whisper_key(const CallCtx& ctx, int service_id, int hop, WhisperEnvelope envelope);
    // True iff every submission due by now exists, matched and on time. On a
    // False the service settles immediately with the owner of the first
    // missed obligation judged guilty.
    bool verification(const CallCtx& ctx, int service_id);

    // --- reporting ---
    void release_report(const CallCtx& ctx, int service_id, const Bytes& evidence);
    Money release_award(const CallCtx& ctx, int service_id);
    // reporter_hop in [1, k+1]; the suspect is the previous party on the path
    void drop_report(const CallCtx& ctx, int service_id, int reporter_hop);
    Money drop_award(const CallCtx& ctx, int service_id);

    const Service& service(int service_id) const;
    std::size_t service_count() const { return services_.size(); }
    const std::vector<EventRecord>& events() const { return events_; }

private:
    struct Requirement {
        TimePoint deadline = 0;
        int path_pos = 0;
        std::string owner;
        bool satisfied = false;
        const char* what = "";
    };

    Service& svc(int service_id);
    std::string party_at(const Service& s, int pos) const;  // 0=sender, 1..k hops, k+1=recipient
    std::vector<Requirement> requirements(const Service& s) const;
    void settle_success(Service& s);
    void settle_guilty(Service& s, const std::string& guilty);
    void settle_release(Service& s, const std::string& reporter);
    void settle_dispute(Service& s, int reporter_hop);
    void pay_peers_except(Service& s, const std::vector<std::string>& excluded);
    void ensure_wallet(const std::string& peer_name);

    struct EventScope;
    void order_guard(const CallCtx& ctx);

    Ledger ledger_;
    CryptoSuite suite_;
    std::map<std::string, PeerRecord> peers_;
    std::vector<Service> services_;
    std::vector<EventRecord> events_;
    TimePoint last_time_ = INT64_MIN;
    int last_sub_ = 0;
};

// Builds the per-hop deadline schedule for a plan; throws MalformedSubmission
// when the route segments are inconsistent with the storage window.
std::vector<HopSchedule> build_schedule(const ServicePlan& plan);

// Per-hop payments: the override when present, otherwise the canonical
// per-peer payment over each hop's served hours.
std::vector<Money> hop_payments(const ServicePlan& plan, const std::vector<HopSchedule>& schedule);

}  // namespace trs
