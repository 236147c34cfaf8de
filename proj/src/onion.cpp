#include "trs/onion.hpp"

#include "trs/errors.hpp"

namespace trs {
namespace {

constexpr std::uint8_t kKindPackage = 0;
constexpr std::uint8_t kKindSecretKey = 1;

Bytes frame_layer(std::uint8_t kind, const Bytes& nonce, const Bytes& payload) {
    Bytes out;
    out.reserve(1 + 2 + nonce.size() + 4 + payload.size());
    out.push_back(kind);
    out.push_back(std::uint8_t(nonce.size() & 0xff));
    out.push_back(std::uint8_t(nonce.size() >> 8));
    out.insert(out.end(), nonce.begin(), nonce.end());
    auto n = static_cast<std::uint32_t>(payload.size());
    for (int i = 0; i < 4; ++i) out.push_back(std::uint8_t(n >> (8 * i)));
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

}  // namespace

OnionBuildResult build_onion(const CryptoSuite& suite, std::span<const std::uint8_t> secret_key,
                             const std::vector<RouteKey>& route, const RouteKey& recipient,
                             Rng& rng) {
    OnionBuildResult result;
    result.certificates.resize(route.size() + 1);

    auto fresh_cert = [&](const std::string& holder) {
        Certificate c;
        c.holder = holder;
        c.nonce = rng.bytes(suite.nonce_length);
        c.commitment = suite.digest(c.nonce);
        return c;
    };

    Certificate recipient_cert = fresh_cert(recipient.holder);
    Bytes plain = frame_layer(kKindSecretKey, recipient_cert.nonce,
                              Bytes(secret_key.begin(), secret_key.end()));
    Bytes blob = suite.cipher->encrypt(recipient.public_key, plain, rng);
    result.innermost_hash = suite.digest(blob);
    result.certificates.back() = std::move(recipient_cert);

    for (std::size_t i = route.size(); i > 0; --i) {
        const RouteKey& hop = route[i - 1];
        Certificate cert = fresh_cert(hop.holder);
        Bytes layer = frame_layer(kKindPackage, cert.nonce, blob);
        blob = suite.cipher->encrypt(hop.public_key, layer, rng);
        result.certificates[i - 1] = std::move(cert);
    }

    result.package.blob = std::move(blob);
    return result;
}

PeelResult peel(const CryptoSuite& suite, const OnionPackage& package,
                std::span<const std::uint8_t> private_key) {
    Bytes plain = suite.cipher->decrypt(private_key, package.blob);
    std::size_t pos = 0;
    auto need = [&](std::size_t n) {
        if (plain.size() - pos < n) throw DecryptFailure("truncated onion layer");
    };
    need(3);
    std::uint8_t kind = plain[pos++];
    std::size_t nonce_len = plain[pos] | (std::size_t(plain[pos + 1]) << 8);
    pos += 2;
    need(nonce_len + 4);
    Bytes nonce(plain.begin() + pos, plain.begin() + pos + nonce_len);
    pos += nonce_len;
    std::uint32_t payload_len = 0;
    for (int i = 0; i < 4; ++i) payload_len |= std::uint32_t(plain[pos + i]) << (8 * i);
    pos += 4;
    need(payload_len);
    Bytes payload(plain.begin() + pos, plain.begin() + pos + payload_len);

    PeelResult out;
    out.certificate.nonce = std::move(nonce);
    out.certificate.commitment = suite.digest(out.certificate.nonce);
    if (kind == kKindSecretKey) {
        out.secret_key = std::move(payload);
    } else if (kind == kKindPackage) {
        out.package = OnionPackage{std::move(payload)};
    } else {
        throw DecryptFailure("unknown layer kind");
    }
    return out;
}

bool verify_certificate(const CryptoSuite& suite, std::span<const std::uint8_t> nonce,
                        std::span<const std::uint8_t> commitment) {
    Bytes want = suite.digest(nonce);
    return want.size() == commitment.size() && std::equal(want.begin(), want.end(), commitment.begin());
}

}  // namespace trs
