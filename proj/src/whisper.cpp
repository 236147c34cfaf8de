#include "trs/whisper.hpp"

namespace trs {

WhisperEnvelope seal_channel_key(const CryptoSuite& suite,
                                 std::span<const std::uint8_t> receiver_public_key,
                                 std::span<const std::uint8_t> channel_key, Rng& rng) {
    return WhisperEnvelope{suite.cipher->encrypt(receiver_public_key, channel_key, rng)};
}

Bytes open_channel_key(const CryptoSuite& suite, std::span<const std::uint8_t> receiver_private_key,
                       const WhisperEnvelope& envelope) {
    return suite.cipher->decrypt(receiver_private_key, envelope.sealed_key);
}

}  // namespace trs
