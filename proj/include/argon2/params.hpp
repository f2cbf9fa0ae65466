#ifndef ARGON2_PARAMS_HPP
#define ARGON2_PARAMS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace argon2 {

enum class Variant : std::uint32_t {
    data_dependent = 0,   // "argon2d": indexing reads the previous block
    data_independent = 1  // "argon2i": indexing from a counter-mode stream
};

/// Full input tuple of the scheme minus the per-call password and salt.
/// The derived geometry fields are filled in by validate_params.
struct Params {
    std::uint32_t lanes = 4;
    std::uint32_t tag_len = 32;          // bytes
    std::uint32_t memory_kib = 1u << 20; // requested memory in 1024-byte units
    std::uint32_t passes = 3;
    Variant variant = Variant::data_independent;
    std::vector<std::uint8_t> secret;    // optional key, hashed into H0
    std::vector<std::uint8_t> ad;        // associated data, hashed into H0

    static constexpr std::uint32_t kVersion = 0x10;

    // Derived by validate_params. block_count is the active block count m',
    // rounded so the matrix splits into lanes x 4 equal slices.
    std::uint32_t block_count = 0;
    std::uint32_t lane_length = 0;
    std::uint32_t segment_length = 0;
};

struct Flags {
    bool clear_memory = false;
    bool clear_password = false;
    bool clear_secret = false;
};

/// Where a block being computed sits: pass, lane, slice, column-in-lane.
struct Position {
    std::uint32_t pass = 0;
    std::uint32_t lane = 0;
    std::uint32_t slice = 0;
    std::uint32_t column = 0;
};

using Tag = std::vector<std::uint8_t>;

/// Checks ranges and computes the derived geometry:
///   block_count = 4 * lanes * floor(memory_kib / (4 * lanes))
///   lane_length = block_count / lanes, segment_length = lane_length / 4.
/// memory_kib must be at least 8 * lanes so every segment holds >= 2 blocks.
/// Throws ParamError naming the offending field.
Params validate_params(Params raw);

/// Advisory only; the library accepts any nonempty salt.
std::optional<std::string> salt_warning(std::span<const std::uint8_t> salt);

}  // namespace argon2

#endif
