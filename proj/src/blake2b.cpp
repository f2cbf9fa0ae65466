#include "argon2/blake2b.hpp"

#include <cstring>

#include "argon2/endian.hpp"
#include "argon2/errors.hpp"

namespace argon2 {

namespace {

constexpr std::uint64_t kIv[8] = {
    0x6a09e667f3bcc908ULL, 0xbb67ae8584caa73bULL,
    0x3c6ef372fe94f82bULL, 0xa54ff53a5f1d36f1ULL,
    0x510e527fade682d1ULL, 0x9b05688c2b3e6c1fULL,
    0x1f83d9abfb41bd6bULL, 0x5be0cd19137e2179ULL};

constexpr std::uint8_t kSigma[12][16] = {
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
    {14, 10, 4, 8, 9, 15, 13, 6, 1, 12, 0, 2, 11, 7, 5, 3},
    {11, 8, 12, 0, 5, 2, 15, 13, 10, 14, 3, 6, 7, 1, 9, 4},
    {7, 9, 3, 1, 13, 12, 11, 14, 2, 6, 5, 10, 4, 0, 15, 8},
    {9, 0, 5, 7, 2, 4, 10, 15, 14, 1, 11, 12, 6, 8, 3, 13},
    {2, 12, 6, 10, 0, 11, 8, 3, 4, 13, 7, 5, 15, 14, 1, 9},
    {12, 5, 1, 15, 14, 13, 4, 10, 0, 7, 6, 3, 9, 2, 8, 11},
    {13, 11, 7, 14, 12, 1, 3, 9, 5, 0, 15, 4, 8, 6, 2, 10},
    {6, 15, 14, 9, 11, 3, 0, 8, 12, 2, 13, 7, 1, 4, 10, 5},
    {10, 2, 8, 4, 7, 6, 1, 5, 15, 11, 9, 14, 3, 12, 13, 0},
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
    {14, 10, 4, 8, 9, 15, 13, 6, 1, 12, 0, 2, 11, 7, 5, 3}};

inline std::uint64_t rotr64(std::uint64_t x, int n) {
    return (x >> n) | (x << (64 - n));
}

inline void g_mix(std::uint64_t& a, std::uint64_t& b, std::uint64_t& c, std::uint64_t& d,
                  std::uint64_t x, std::uint64_t y) {
    a = a + b + x;
    d = rotr64(d ^ a, 32);
    c = c + d;
    b = rotr64(b ^ c, 24);
    a = a + b + y;
    d = rotr64(d ^ a, 16);
    c = c + d;
    b = rotr64(b ^ c, 63);
}

}  // namespace

Blake2b::Blake2b(std::size_t out_len) : out_len_(out_len) {
    if (out_len < 1 || out_len > kMaxDigest) {
        throw ParamError("digest length must be in [1, 64]");
    }
    for (int i = 0; i < 8; ++i) {
        h_[i] = kIv[i];
    }
    // Parameter block word 0: digest length, no key, fanout 1, depth 1.
    h_[0] ^= 0x01010000ULL ^ static_cast<std::uint64_t>(out_len);
    buf_.fill(0);
}

void Blake2b::bump_counter(std::uint64_t bytes) {
    t0_ += bytes;
    if (t0_ < bytes) {
        ++t1_;
    }
}

void Blake2b::compress(const std::uint8_t* block, bool last) {
    std::uint64_t m[16];
    std::uint64_t v[16];
    for (int i = 0; i < 16; ++i) {
        m[i] = load64_le(block + i * 8);
    }
    for (int i = 0; i < 8; ++i) {
        v[i] = h_[i];
        v[i + 8] = kIv[i];
    }
    v[12] ^= t0_;
    v[13] ^= t1_;
    if (last) {
        v[14] = ~v[14];
    }

    for (int r = 0; r < 12; ++r) {
        const std::uint8_t* s = kSigma[r];
        g_mix(v[0], v[4], v[8], v[12], m[s[0]], m[s[1]]);
        g_mix(v[1], v[5], v[9], v[13], m[s[2]], m[s[3]]);
        g_mix(v[2], v[6], v[10], v[14], m[s[4]], m[s[5]]);
        g_mix(v[3], v[7], v[11], v[15], m[s[6]], m[s[7]]);
        g_mix(v[0], v[5], v[10], v[15], m[s[8]], m[s[9]]);
        g_mix(v[1], v[6], v[11], v[12], m[s[10]], m[s[11]]);
        g_mix(v[2], v[7], v[8], v[13], m[s[12]], m[s[13]]);
        g_mix(v[3], v[4], v[9], v[14], m[s[14]], m[s[15]]);
    }

    for (int i = 0; i < 8; ++i) {
        h_[i] ^= v[i] ^ v[i + 8];
    }
}

Blake2b& Blake2b::update(std::span<const std::uint8_t> data) {
    const std::uint8_t* p = data.data();
    std::size_t len = data.size();
    if (len == 0) {
        return *this;
    }

    std::size_t fill = kBlockSize - buf_len_;
    if (len > fill) {
        std::memcpy(buf_.data() + buf_len_, p, fill);
        bump_counter(kBlockSize);
        compress(buf_.data(), false);
        buf_len_ = 0;
        p += fill;
        len -= fill;
        // Keep the last block buffered; it may be final.
        while (len > kBlockSize) {
            bump_counter(kBlockSize);
            compress(p, false);
            p += kBlockSize;
            len -= kBlockSize;
        }
    }
    std::memcpy(buf_.data() + buf_len_, p, len);
    buf_len_ += len;
    return *this;
}

void Blake2b::final(std::span<std::uint8_t> out) {
    if (out.size() != out_len_) {
        throw ParamError("output span does not match digest length");
    }
    bump_counter(buf_len_);
    std::memset(buf_.data() + buf_len_, 0, kBlockSize - buf_len_);
    compress(buf_.data(), true);

    std::uint8_t full[kMaxDigest];
    for (int i = 0; i < 8; ++i) {
        store64_le(full + i * 8, h_[i]);
    }
    std::memcpy(out.data(), full, out_len_);
}

std::vector<std::uint8_t> hash_h(std::span<const std::uint8_t> input, std::size_t out_len) {
    Blake2b state(out_len);
    state.update(input);
    std::vector<std::uint8_t> out(out_len);
    state.final(out);
    return out;
}

void h_prime(std::span<const std::uint8_t> input, std::span<std::uint8_t> out) {
    const std::size_t tau = out.size();
    if (tau == 0) {
        throw ParamError("tag length must be positive");
    }
    std::uint8_t prefix[4];
    store32_le(prefix, static_cast<std::uint32_t>(tau));

    if (tau <= Blake2b::kMaxDigest) {
        Blake2b state(tau);
        state.update(prefix);
        state.update(input);
        state.final(out);
        return;
    }

    const std::size_t r = (tau + 31) / 32 - 2;
    std::uint8_t v[64];
    Blake2b first(64);
    first.update(prefix);
    first.update(input);
    first.final(v);

    std::size_t offset = 0;
    for (std::size_t i = 1; i <= r; ++i) {
        std::memcpy(out.data() + offset, v, 32);
        offset += 32;
        Blake2b next(64);
        next.update(v);
        next.final(v);
    }
    std::memcpy(out.data() + offset, v, tau - 32 * r);
}

std::vector<std::uint8_t> h_prime(std::span<const std::uint8_t> input, std::uint32_t tau) {
    std::vector<std::uint8_t> out(tau);
    h_prime(input, out);
    return out;
}

}  // namespace argon2
