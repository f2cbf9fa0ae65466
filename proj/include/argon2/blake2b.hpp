#ifndef ARGON2_BLAKE2B_HPP
#define ARGON2_BLAKE2B_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace argon2 {

/// Streaming BLAKE2b (unkeyed) with 1..64 byte digests.
class Blake2b {
  public:
    static constexpr std::size_t kMaxDigest = 64;
    static constexpr std::size_t kBlockSize = 128;

    explicit Blake2b(std::size_t out_len);

    Blake2b& update(std::span<const std::uint8_t> data);
    void final(std::span<std::uint8_t> out);  // out.size() must equal out_len

  private:
    void compress(const std::uint8_t* block, bool last);
    void bump_counter(std::uint64_t bytes);

    std::array<std::uint64_t, 8> h_;
    std::array<std::uint8_t, kBlockSize> buf_;
    std::size_t buf_len_ = 0;
    std::uint64_t t0_ = 0;
    std::uint64_t t1_ = 0;
    std::size_t out_len_;
};

/// One-shot digest of out_len bytes, 1 <= out_len <= 64.
std::vector<std::uint8_t> hash_h(std::span<const std::uint8_t> input, std::size_t out_len);

/// Variable-length hash built on hash_h. Writes exactly out.size() bytes;
/// out must not be empty. The output length is bound into the first hashed
/// block, so different lengths give unrelated streams.
void h_prime(std::span<const std::uint8_t> input, std::span<std::uint8_t> out);

std::vector<std::uint8_t> h_prime(std::span<const std::uint8_t> input, std::uint32_t tau);

}  // namespace argon2

#endif
