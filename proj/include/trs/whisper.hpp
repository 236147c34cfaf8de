#pragma once

#include <deque>
#include <map>
#include <optional>
#include <string>

#include "trs/cipher.hpp"
#include "trs/timewin.hpp"

namespace trs {

// A symmetric channel key sealed under the receiving party's public key; only
// the intended receiver can recover the key and read the channel.
struct WhisperEnvelope {
    Bytes sealed_key;
};

WhisperEnvelope seal_channel_key(const CryptoSuite& suite,
                                 std::span<const std::uint8_t> receiver_public_key,
                                 std::span<const std::uint8_t> channel_key, Rng& rng);

Bytes open_channel_key(const CryptoSuite& suite, std::span<const std::uint8_t> receiver_private_key,
                       const WhisperEnvelope& envelope);

struct WhisperMessage {
    std::string from;
    std::string to;
    Bytes payload;
    TimePoint sent_at = 0;
};

// In-process stand-in for private pairwise channels: reliable FIFO queues
// keyed by the channel key. No transport crypto is modeled beyond the
// envelope; the channel itself is assumed private.
class WhisperBus {
public:
    void post(const Bytes& channel_key, WhisperMessage message) {
        queues_[hex(channel_key)].push_back(std::move(message));
    }

    std::optional<WhisperMessage> poll(const Bytes& channel_key) {
        auto it = queues_.find(hex(channel_key));
        if (it == queues_.end() || it->second.empty()) return std::nullopt;
        WhisperMessage m = std::move(it->second.front());
        it->second.pop_front();
        return m;
    }

private:
    std::map<std::string, std::deque<WhisperMessage>> queues_;
};

}  // namespace trs
