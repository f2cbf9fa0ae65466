#ifndef ARGON2_ENDIAN_HPP
#define ARGON2_ENDIAN_HPP

#include <cstdint>
#include <cstring>

namespace argon2 {

inline std::uint64_t load64_le(const std::uint8_t* src) {
    std::uint64_t w;
    std::memcpy(&w, src, sizeof(w));
#if defined(__BYTE_ORDER__) && __BYTE_ORDER__ == __ORDER_BIG_ENDIAN__
    w = __builtin_bswap64(w);
#endif
    return w;
}

inline void store64_le(std::uint8_t* dst, std::uint64_t w) {
#if defined(__BYTE_ORDER__) && __BYTE_ORDER__ == __ORDER_BIG_ENDIAN__
    w = __builtin_bswap64(w);
#endif
    std::memcpy(dst, &w, sizeof(w));
}

inline std::uint32_t load32_le(const std::uint8_t* src) {
    std::uint32_t w;
    std::memcpy(&w, src, sizeof(w));
#if defined(__BYTE_ORDER__) && __BYTE_ORDER__ == __ORDER_BIG_ENDIAN__
    w = __builtin_bswap32(w);
#endif
    return w;
}

inline void store32_le(std::uint8_t* dst, std::uint32_t w) {
#if defined(__BYTE_ORDER__) && __BYTE_ORDER__ == __ORDER_BIG_ENDIAN__
    w = __builtin_bswap32(w);
#endif
    std::memcpy(dst, &w, sizeof(w));
}

}  // namespace argon2

#endif
