#pragma once

#include <memory>
#include <span>
#include <string>

#include "trs/hash.hpp"
#include "trs/rng.hpp"

namespace trs {

struct KeyPair {
    Bytes public_key;
    Bytes private_key;
};

// Public-key encryption behind a minimal interface. The protocol only needs
// encrypt-under-public / decrypt-under-private semantics with detectable
// wrong-key failures, so schemes are swappable.
class CipherScheme {
public:
    virtual ~CipherScheme() = default;
    virtual std::string name() const = 0;
    virtual KeyPair generate(Rng& rng) const = 0;
    virtual Bytes encrypt(std::span<const std::uint8_t> public_key,
                          std::span<const std::uint8_t> plaintext, Rng& rng) const = 0;
    // throws DecryptFailure on key mismatch or corrupted ciphertext
    virtual Bytes decrypt(std::span<const std::uint8_t> private_key,
                          std::span<const std::uint8_t> ciphertext) const = 0;
};

// Deterministic test scheme: a position-keyed byte permutation derived from
// the public key, plus a short tag so the wrong key fails detectably. Small
// keys, zero security, fast enough for exhaustive tests.
std::shared_ptr<const CipherScheme> make_test_cipher();

// Hashed ElGamal over the 2048-bit MODP group (g = 2): KEM-style shared
// secret, stream cipher and MAC derived from SHA-256. Used for integration
// runs where real asymmetric key material is wanted.
std::shared_ptr<const CipherScheme> make_elgamal_cipher();

// Hash + cipher + nonce sizing bundled, so test and real modes switch as one.
struct CryptoSuite {
    std::shared_ptr<const CipherScheme> cipher;
    HashKind hash = HashKind::sha256;
    std::size_t nonce_length = 32;

    Bytes digest(std::span<const std::uint8_t> data) const { return hash_bytes(hash, data); }

    static CryptoSuite test();  // fold16 digests, 2-byte nonces
    static CryptoSuite real();  // sha256 digests, 32-byte nonces
    static CryptoSuite named(const std::string& name);
};

}  // namespace trs
