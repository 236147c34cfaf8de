#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace trs {

using Bytes = std::vector<std::uint8_t>;

enum class HashKind {
    sha256,  // 32-byte digest
    fold16,  // 2-byte test digest, bijective on two-byte inputs
};

Bytes sha256(std::span<const std::uint8_t> data);

// Test digest: a fixed 16-bit permutation applied to the input (folded first
// when longer than two bytes). Bijectivity on the two-byte nonce space makes
// exhaustive commitment-binding searches collision-free.
Bytes fold16(std::span<const std::uint8_t> data);

Bytes hash_bytes(HashKind kind, std::span<const std::uint8_t> data);

std::string hex(std::span<const std::uint8_t> data);

}  // namespace trs
