#ifndef ARGON2_BLOCK_HPP
#define ARGON2_BLOCK_HPP

#include <array>
#include <cassert>
#include <cstdint>
#include <span>

#include "argon2/endian.hpp"

namespace argon2 {

inline constexpr std::size_t kBlockBytes = 1024;
inline constexpr std::size_t kBlockWords = kBlockBytes / 8;

/// Fixed 1024-byte working unit of the memory matrix, held as 128
/// little-endian 64-bit words. The byte view is defined by the word order,
/// so serialization is identical on every platform.
struct Block {
    std::array<std::uint64_t, kBlockWords> words{};

    static Block from_bytes(std::span<const std::uint8_t> bytes) {
        assert(bytes.size() == kBlockBytes);
        Block b;
        for (std::size_t i = 0; i < kBlockWords; ++i) {
            b.words[i] = load64_le(bytes.data() + i * 8);
        }
        return b;
    }

    std::array<std::uint8_t, kBlockBytes> to_bytes() const {
        std::array<std::uint8_t, kBlockBytes> out;
        for (std::size_t i = 0; i < kBlockWords; ++i) {
            store64_le(out.data() + i * 8, words[i]);
        }
        return out;
    }

    Block& operator^=(const Block& other) noexcept {
        for (std::size_t i = 0; i < kBlockWords; ++i) {
            words[i] ^= other.words[i];
        }
        return *this;
    }

    friend Block operator^(Block a, const Block& b) noexcept { return a ^= b; }

    bool operator==(const Block&) const noexcept = default;

    bool is_zero() const noexcept {
        std::uint64_t acc = 0;
        for (std::uint64_t w : words) {
            acc |= w;
        }
        return acc == 0;
    }
};

}  // namespace argon2

#endif
