#include "trs/cipher.hpp"

#include <array>
#include <cstring>

#include "trs/errors.hpp"

namespace trs {
namespace {

Bytes cat(std::initializer_list<std::span<const std::uint8_t>> parts) {
    Bytes out;
    for (auto p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

Bytes keystream(std::span<const std::uint8_t> key, std::size_t n) {
    Bytes out;
    out.reserve(n + 32);
    std::uint32_t ctr = 0;
    while (out.size() < n) {
        Bytes block(key.begin(), key.end());
        block.push_back(std::uint8_t(ctr >> 24));
        block.push_back(std::uint8_t(ctr >> 16));
        block.push_back(std::uint8_t(ctr >> 8));
        block.push_back(std::uint8_t(ctr));
        Bytes d = sha256(block);
        out.insert(out.end(), d.begin(), d.end());
        ++ctr;
    }
    out.resize(n);
    return out;
}

// ---------------------------------------------------------------------------
// test scheme

class PermutationCipher final : public CipherScheme {
public:
    std::string name() const override { return "deterministic-test"; }

    KeyPair generate(Rng& rng) const override {
        KeyPair kp;
        kp.private_key = rng.bytes(8);
        kp.public_key = derive_public(kp.private_key);
        return kp;
    }

    Bytes encrypt(std::span<const std::uint8_t> pub, std::span<const std::uint8_t> plain,
                  Rng& rng) const override {
        Bytes nonce = rng.bytes(4);
        Bytes stream = keystream(cat({pub, nonce}), plain.size());
        Bytes out = nonce;
        for (std::size_t i = 0; i < plain.size(); ++i)
            out.push_back(static_cast<std::uint8_t>(plain[i] ^ stream[i]));
        Bytes tag = sha256(cat({pub, nonce, plain}));
        out.insert(out.end(), tag.begin(), tag.begin() + 4);
        return out;
    }

    Bytes decrypt(std::span<const std::uint8_t> priv,
                  std::span<const std::uint8_t> ct) const override {
        if (ct.size() < 8) throw DecryptFailure("ciphertext too short");
        Bytes pub = derive_public(priv);
        auto nonce = ct.subspan(0, 4);
        auto body = ct.subspan(4, ct.size() - 8);
        auto tag = ct.subspan(ct.size() - 4, 4);
        Bytes stream = keystream(cat({pub, nonce}), body.size());
        Bytes plain(body.size());
        for (std::size_t i = 0; i < body.size(); ++i)
            plain[i] = static_cast<std::uint8_t>(body[i] ^ stream[i]);
        Bytes want = sha256(cat({pub, nonce, plain}));
        if (!std::equal(tag.begin(), tag.end(), want.begin())) throw DecryptFailure("tag mismatch");
        return plain;
    }

private:
    static Bytes derive_public(std::span<const std::uint8_t> priv) {
        Bytes seed = cat({priv});
        seed.push_back('p');
        Bytes d = sha256(seed);
        return Bytes(d.begin(), d.begin() + 8);
    }
};

// ---------------------------------------------------------------------------
// hashed ElGamal over the 2048-bit MODP group

constexpr int kLimbs = 32;  // 32 x 64 = 2048 bits
using Fp = std::array<std::uint64_t, kLimbs>;
using u128 = unsigned __int128;

// RFC 3526 group 14 modulus, generator 2.
constexpr char kPrimeHex[] =
    "FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD129024E088A67CC74"
    "020BBEA63B139B22514A08798E3404DDEF9519B3CD3A431B302B0A6DF25F1437"
    "4FE1356D6D51C245E485B576625E7EC6F44C42E9A637ED6B0BFF5CB6F406B7ED"
    "EE386BFB5A899FA5AE9F24117C4B1FE649286651ECE45B3DC2007CB8A163BF05"
    "98DA48361C55D39A69163FA8FD24CF5F83655D23DCA3AD961C62F356208552BB"
    "9ED529077096966D670C354E4ABC9804F1746C08CA18217C32905E462E36CE3B"
    "E39E772C180E86039B2783A2EC07A28FB5C55DF06F4C52C9DE2BCBF695581718"
    "3995497CEA956AE515D2261898FA051015728E5A8AACAA68FFFFFFFFFFFFFFFF";

Fp parse_hex(const char* hexstr) {
    Fp out{};
    std::size_t n = std::strlen(hexstr);
    for (std::size_t i = 0; i < n; ++i) {
        char c = hexstr[n - 1 - i];
        std::uint64_t v = c <= '9' ? std::uint64_t(c - '0') : std::uint64_t(c - 'A' + 10);
        out[i / 16] |= v << (4 * (i % 16));
    }
    return out;
}

const Fp& prime() {
    static const Fp p = parse_hex(kPrimeHex);
    return p;
}

int fp_cmp(const Fp& a, const Fp& b) {
    for (int i = kLimbs - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

bool fp_sub(Fp& a, const Fp& b) {  // a -= b, returns borrow
    u128 borrow = 0;
    for (int i = 0; i < kLimbs; ++i) {
        u128 d = static_cast<u128>(a[i]) - b[i] - borrow;
        a[i] = static_cast<std::uint64_t>(d);
        borrow = (d >> 64) ? 1 : 0;
    }
    return borrow != 0;
}

bool fp_add(Fp& a, const Fp& b) {  // a += b, returns carry
    u128 carry = 0;
    for (int i = 0; i < kLimbs; ++i) {
        u128 s = static_cast<u128>(a[i]) + b[i] + carry;
        a[i] = static_cast<std::uint64_t>(s);
        carry = s >> 64;
    }
    return carry != 0;
}

std::uint64_t n0_inv() {
    // -p[0]^{-1} mod 2^64 by Newton iteration
    std::uint64_t p0 = prime()[0];
    std::uint64_t x = 1;
    for (int i = 0; i < 6; ++i) x *= 2 - p0 * x;
    return ~x + 1;
}

// CIOS Montgomery multiplication: out = a * b * R^{-1} mod p, R = 2^2048.
void mont_mul(const Fp& a, const Fp& b, Fp& out) {
    static const Fp& p = prime();
    static const std::uint64_t inv = n0_inv();
    std::uint64_t t[kLimbs + 2] = {0};
    for (int i = 0; i < kLimbs; ++i) {
        u128 carry = 0;
        for (int j = 0; j < kLimbs; ++j) {
            u128 cur = static_cast<u128>(a[i]) * b[j] + t[j] + carry;
            t[j] = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
        }
        u128 s = static_cast<u128>(t[kLimbs]) + carry;
        t[kLimbs] = static_cast<std::uint64_t>(s);
        t[kLimbs + 1] = static_cast<std::uint64_t>(s >> 64);

        std::uint64_t m = t[0] * inv;
        u128 cur = static_cast<u128>(m) * p[0] + t[0];
        carry = cur >> 64;
        for (int j = 1; j < kLimbs; ++j) {
            cur = static_cast<u128>(m) * p[j] + t[j] + carry;
            t[j - 1] = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
        }
        s = static_cast<u128>(t[kLimbs]) + carry;
        t[kLimbs - 1] = static_cast<std::uint64_t>(s);
        t[kLimbs] = t[kLimbs + 1] + static_cast<std::uint64_t>(s >> 64);
        t[kLimbs + 1] = 0;
    }
    Fp r;
    std::memcpy(r.data(), t, sizeof(r));
    if (t[kLimbs] != 0 || fp_cmp(r, p) >= 0) fp_sub(r, p);
    out = r;
}

const Fp& r2_mod_p() {
    // 2^4096 mod p by repeated doubling
    static const Fp r2 = [] {
        const Fp& p = prime();
        Fp x{};
        x[0] = 1;
        for (int i = 0; i < 4096; ++i) {
            Fp d = x;
            bool carry = fp_add(d, x);
            if (carry || fp_cmp(d, p) >= 0) fp_sub(d, p);
            x = d;
        }
        return x;
    }();
    return r2;
}

Fp to_mont(const Fp& a) {
    Fp r;
    mont_mul(a, r2_mod_p(), r);
    return r;
}

Fp from_mont(const Fp& a) {
    Fp one{};
    one[0] = 1;
    Fp r;
    mont_mul(a, one, r);
    return r;
}

// base^exp mod p, exponent as big-endian bytes
Fp modexp(const Fp& base, std::span<const std::uint8_t> exp) {
    Fp acc = to_mont([] { Fp one{}; one[0] = 1; return one; }());
    Fp b = to_mont(base);
    for (std::uint8_t byte : exp) {
        for (int bit = 7; bit >= 0; --bit) {
            mont_mul(acc, acc, acc);
            if ((byte >> bit) & 1) mont_mul(acc, b, acc);
        }
    }
    return from_mont(acc);
}

Bytes fp_to_bytes(const Fp& a) {  // big-endian, 256 bytes
    Bytes out(kLimbs * 8);
    for (int i = 0; i < kLimbs; ++i)
        for (int b = 0; b < 8; ++b)
            out[out.size() - 1 - (8 * i + b)] = std::uint8_t(a[i] >> (8 * b));
    return out;
}

Fp fp_from_bytes(std::span<const std::uint8_t> in) {
    if (in.size() != kLimbs * 8) throw DecryptFailure("bad group element size");
    Fp out{};
    for (std::size_t i = 0; i < in.size(); ++i)
        out[(in.size() - 1 - i) / 8] |= std::uint64_t(in[i]) << (8 * ((in.size() - 1 - i) % 8));
    return out;
}

class ElGamalCipher final : public CipherScheme {
public:
    std::string name() const override { return "elgamal-2048"; }

    KeyPair generate(Rng& rng) const override {
        KeyPair kp;
        kp.private_key = rng.bytes(32);
        kp.private_key[0] |= 0x40;  // keep the exponent large
        Fp g{};
        g[0] = 2;
        kp.public_key = fp_to_bytes(modexp(g, kp.private_key));
        return kp;
    }

    Bytes encrypt(std::span<const std::uint8_t> pub, std::span<const std::uint8_t> plain,
                  Rng& rng) const override {
        Bytes eph = rng.bytes(32);
        eph[0] |= 0x40;
        Fp g{};
        g[0] = 2;
        Bytes c1 = fp_to_bytes(modexp(g, eph));
        Bytes shared = fp_to_bytes(modexp(fp_from_bytes(pub), eph));
        Bytes key = sha256(cat({c1, shared}));
        Bytes stream = keystream(key, plain.size());
        Bytes out = c1;
        for (std::size_t i = 0; i < plain.size(); ++i)
            out.push_back(static_cast<std::uint8_t>(plain[i] ^ stream[i]));
        Bytes mac_in = cat({key, plain});
        mac_in.push_back(0x01);
        Bytes tag = sha256(mac_in);
        out.insert(out.end(), tag.begin(), tag.begin() + 16);
        return out;
    }

    Bytes decrypt(std::span<const std::uint8_t> priv,
                  std::span<const std::uint8_t> ct) const override {
        if (ct.size() < kLimbs * 8 + 16) throw DecryptFailure("ciphertext too short");
        auto c1 = ct.subspan(0, kLimbs * 8);
        auto body = ct.subspan(kLimbs * 8, ct.size() - kLimbs * 8 - 16);
        auto tag = ct.subspan(ct.size() - 16, 16);
        Bytes shared = fp_to_bytes(modexp(fp_from_bytes(c1), priv));
        Bytes key = sha256(cat({c1, shared}));
        Bytes stream = keystream(key, body.size());
        Bytes plain(body.size());
        for (std::size_t i = 0; i < body.size(); ++i)
            plain[i] = static_cast<std::uint8_t>(body[i] ^ stream[i]);
        Bytes mac_in = cat({key, plain});
        mac_in.push_back(0x01);
        Bytes want = sha256(mac_in);
        if (!std::equal(tag.begin(), tag.end(), want.begin())) throw DecryptFailure("tag mismatch");
        return plain;
    }
};

}  // namespace

std::shared_ptr<const CipherScheme> make_test_cipher() {
    static const auto scheme = std::make_shared<const PermutationCipher>();
    return scheme;
}

std::shared_ptr<const CipherScheme> make_elgamal_cipher() {
    static const auto scheme = std::make_shared<const ElGamalCipher>();
    return scheme;
}

CryptoSuite CryptoSuite::test() {
    return CryptoSuite{make_test_cipher(), HashKind::fold16, 2};
}

CryptoSuite CryptoSuite::real() {
    return CryptoSuite{make_elgamal_cipher(), HashKind::sha256, 32};
}

CryptoSuite CryptoSuite::named(const std::string& name) {
    if (name == "test") return test();
    if (name == "real") return real();
    throw Error("unknown crypto suite: " + name);
}

}  // namespace trs
