#ifndef ARGON2_COMPRESS_HPP
#define ARGON2_COMPRESS_HPP

#include <cstdint>
#include <span>

#include "argon2/block.hpp"

namespace argon2 {

/// A 128-byte row of eight 16-byte registers, viewed as 16 words.
using RegisterRow = std::span<std::uint64_t, 16>;

/// In-place permutation of one row: a single message-less BLAKE2b round
/// over the 16 little-endian words.
void round_p(RegisterRow row) noexcept;

/// Two-block compression. Only the XOR of the inputs matters: the XOR is
/// permuted row-wise then column-wise and folded back onto itself.
Block compress_g(const Block& x, const Block& y) noexcept;

/// compress_g applied twice with the same first argument.
Block compress_g2(const Block& x, const Block& y) noexcept;

}  // namespace argon2

#endif
