#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trs/cipher.hpp"
#include "trs/hash.hpp"

namespace trs {

// Per-hop secret embedded inside an onion layer. The commitment (digest of
// the nonce) is published on the contract; revealing the nonce later proves
// the layer was correctly received and decrypted.
struct Certificate {
    std::string holder;
    Bytes nonce;
    Bytes commitment;
};

// A (possibly nested) ciphertext blob. Layer order equals the route order:
// peeling with hop keys sender-side first walks down to the recipient layer.
struct OnionPackage {
    Bytes blob;
};

struct RouteKey {
    std::string holder;
    Bytes public_key;
};

struct OnionBuildResult {
    OnionPackage package;
    std::vector<Certificate> certificates;  // route order, recipient last
    Bytes innermost_hash;                   // digest of the recipient-only ciphertext
};

// Wraps the secret key for the recipient, then one layer per route hop from
// the last hop outward. Route may be empty (direct-to-recipient case).
// Layer payload layout (little-endian, stable):
//   [u8 kind: 0 = nested package, 1 = secret key]
//   [u16 nonce length][nonce]
//   [u32 payload length][payload]
OnionBuildResult build_onion(const CryptoSuite& suite, std::span<const std::uint8_t> secret_key,
                             const std::vector<RouteKey>& route, const RouteKey& recipient,
                             Rng& rng);

struct PeelResult {
    Certificate certificate;               // holder left empty; caller knows the hop
    std::optional<OnionPackage> package;   // set for intermediate layers
    std::optional<Bytes> secret_key;       // set for the innermost layer
};

// Removes one layer. Throws DecryptFailure when the private key does not
// match the outer layer or the blob is corrupted.
PeelResult peel(const CryptoSuite& suite, const OnionPackage& package,
                std::span<const std::uint8_t> private_key);

bool verify_certificate(const CryptoSuite& suite, std::span<const std::uint8_t> nonce,
                        std::span<const std::uint8_t> commitment);

}  // namespace trs
