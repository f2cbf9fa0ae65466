#ifndef ARGON2_SECURE_WIPE_HPP
#define ARGON2_SECURE_WIPE_HPP

#include <cstddef>
#include <cstdint>
#include <span>

namespace argon2 {

/// Zeroization that the optimizer is not allowed to elide.
void secure_zero(void* data, std::size_t size) noexcept;

inline void secure_zero(std::span<std::uint8_t> bytes) noexcept {
    secure_zero(bytes.data(), bytes.size());
}

/// Equality whose running time does not depend on where the inputs differ.
/// Both spans must be the same length.
bool constant_time_equal(std::span<const std::uint8_t> a,
                         std::span<const std::uint8_t> b) noexcept;

}  // namespace argon2

#endif
