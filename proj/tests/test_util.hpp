#ifndef ARGON2LAB_TESTS_TEST_UTIL_HPP
#define ARGON2LAB_TESTS_TEST_UTIL_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "argon2/block.hpp"
#include "argon2/params.hpp"
#include "reference_impl.hpp"

namespace testutil {

inline std::mt19937_64 seeded_rng(std::uint64_t seed = 0xa4602b0d15ULL) {
    return std::mt19937_64(seed);
}

inline std::vector<std::uint8_t> random_bytes(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint8_t> out(n);
    for (auto& b : out) {
        b = static_cast<std::uint8_t>(rng());
    }
    return out;
}

inline argon2::Block random_block(std::mt19937_64& rng) {
    argon2::Block b;
    for (auto& w : b.words) {
        w = rng();
    }
    return b;
}

inline refimpl::Bytes block_bytes(const argon2::Block& block) {
    auto raw = block.to_bytes();
    return refimpl::Bytes(raw.begin(), raw.end());
}

inline argon2::Block to_block(const refimpl::Bytes& bytes) {
    return argon2::Block::from_bytes(bytes);
}

inline refimpl::RefParams to_ref(const argon2::Params& params) {
    refimpl::RefParams ref;
    ref.lanes = params.lanes;
    ref.tag_len = params.tag_len;
    ref.memory_kib = params.memory_kib;
    ref.passes = params.passes;
    ref.variant = static_cast<std::uint32_t>(params.variant);
    ref.secret = params.secret;
    ref.ad = params.ad;
    return ref;
}

inline std::string hex(std::span<const std::uint8_t> bytes) {
    return refimpl::to_hex(refimpl::Bytes(bytes.begin(), bytes.end()));
}

inline int popcount8(std::uint8_t v) {
    int n = 0;
    while (v) {
        n += v & 1;
        v >>= 1;
    }
    return n;
}

inline std::size_t differing_bits(std::span<const std::uint8_t> a,
                                  std::span<const std::uint8_t> b) {
    std::size_t bits = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        bits += static_cast<std::size_t>(popcount8(a[i] ^ b[i]));
    }
    return bits;
}

}  // namespace testutil

#endif
