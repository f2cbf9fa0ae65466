#include "argon2/secure_wipe.hpp"

#include <cstring>

#if defined(__GLIBC__) || defined(__APPLE__) || defined(__OpenBSD__) || defined(__FreeBSD__)
#include <strings.h>
#define ARGON2_HAVE_EXPLICIT_BZERO 1
#endif

namespace argon2 {

void secure_zero(void* data, std::size_t size) noexcept {
    if (size == 0) {
        return;
    }
#if defined(ARGON2_HAVE_EXPLICIT_BZERO)
    explicit_bzero(data, size);
#else
    volatile std::uint8_t* p = static_cast<volatile std::uint8_t*>(data);
    for (std::size_t i = 0; i < size; ++i) {
        p[i] = 0;
    }
#endif
}

bool constant_time_equal(std::span<const std::uint8_t> a,
                         std::span<const std::uint8_t> b) noexcept {
    if (a.size() != b.size()) {
        return false;  // callers treat length mismatch as an error beforehand
    }
    volatile std::uint8_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc = acc | static_cast<std::uint8_t>(a[i] ^ b[i]);
    }
    return acc == 0;
}

}  // namespace argon2
