#include "argon2/params.hpp"

#include "argon2/errors.hpp"

namespace argon2 {

Params validate_params(Params raw) {
    if (raw.lanes == 0 || raw.lanes > (1u << 24)) {
        throw ParamError("lanes: must be in [1, 2^24]");
    }
    if (raw.tag_len < 4) {
        throw ParamError("tag too short: need at least 4 bytes");
    }
    if (raw.memory_kib < 8 * static_cast<std::uint64_t>(raw.lanes)) {
        throw ParamError("memory too small: need at least 8 blocks per lane");
    }
    if (raw.passes == 0) {
        throw ParamError("passes: must be at least 1");
    }
    if (static_cast<std::uint32_t>(raw.variant) > 1) {
        throw ParamError("variant: must be 0 or 1");
    }

    const std::uint32_t group = 4 * raw.lanes;
    raw.block_count = group * (raw.memory_kib / group);
    raw.lane_length = raw.block_count / raw.lanes;
    raw.segment_length = raw.lane_length / 4;
    // m >= 8p makes these unreachable; kept as the geometry contract.
    if (raw.lane_length < 2 || raw.segment_length < 1) {
        throw ParamError("memory too small: degenerate matrix geometry");
    }
    return raw;
}

std::optional<std::string> salt_warning(std::span<const std::uint8_t> salt) {
    if (salt.size() < 8) {
        return "salt is shorter than 8 bytes; 16 random bytes are recommended";
    }
    return std::nullopt;
}

}  // namespace argon2
