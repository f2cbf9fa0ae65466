#include "argon2/compress.hpp"

namespace argon2 {

namespace {

inline std::uint64_t rotr64(std::uint64_t x, int n) {
    return (x >> n) | (x << (64 - n));
}

// Message-less BLAKE2b quarter function.
inline void g_mix(std::uint64_t& a, std::uint64_t& b, std::uint64_t& c, std::uint64_t& d) {
    a = a + b;
    d = rotr64(d ^ a, 32);
    c = c + d;
    b = rotr64(b ^ c, 24);
    a = a + b;
    d = rotr64(d ^ a, 16);
    c = c + d;
    b = rotr64(b ^ c, 63);
}

}  // namespace

void round_p(RegisterRow v) noexcept {
    g_mix(v[0], v[4], v[8], v[12]);
    g_mix(v[1], v[5], v[9], v[13]);
    g_mix(v[2], v[6], v[10], v[14]);
    g_mix(v[3], v[7], v[11], v[15]);
    g_mix(v[0], v[5], v[10], v[15]);
    g_mix(v[1], v[6], v[11], v[12]);
    g_mix(v[2], v[7], v[8], v[13]);
    g_mix(v[3], v[4], v[9], v[14]);
}

Block compress_g(const Block& x, const Block& y) noexcept {
    Block r = x ^ y;
    Block z = r;

    // Rows: 16 consecutive words each.
    for (std::size_t row = 0; row < 8; ++row) {
        round_p(RegisterRow(z.words.data() + row * 16, 16));
    }

    // Columns: the c-th 16-byte register (word pair) of every row.
    for (std::size_t col = 0; col < 8; ++col) {
        std::uint64_t tmp[16];
        for (std::size_t row = 0; row < 8; ++row) {
            tmp[2 * row] = z.words[row * 16 + 2 * col];
            tmp[2 * row + 1] = z.words[row * 16 + 2 * col + 1];
        }
        round_p(RegisterRow(tmp, 16));
        for (std::size_t row = 0; row < 8; ++row) {
            z.words[row * 16 + 2 * col] = tmp[2 * row];
            z.words[row * 16 + 2 * col + 1] = tmp[2 * row + 1];
        }
    }

    z ^= r;
    return z;
}

Block compress_g2(const Block& x, const Block& y) noexcept {
    return compress_g(x, compress_g(x, y));
}

}  // namespace argon2
