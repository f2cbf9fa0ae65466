#ifndef ARGON2_INDEXING_HPP
#define ARGON2_INDEXING_HPP

#include <cstdint>

#include "argon2/block.hpp"
#include "argon2/params.hpp"

namespace argon2::indexing {

struct AddressCouple {
    std::uint32_t j1 = 0;
    std::uint32_t j2 = 0;
};

/// Counter-mode address source for the data-independent variant. One stream
/// is confined to a single segment; the counter restarts at 1 there.
struct AddressStream {
    Block addresses{};
    std::uint32_t cursor = kBlockWords;  // couples consumed; 128 forces a refill
    std::uint64_t counter = 0;           // address blocks generated so far
};

/// Data-dependent addressing: the first two 32-bit words of the previous
/// block in the lane.
AddressCouple theta_d(const Block& prev) noexcept;

/// Data-independent addressing: next couple from the stream, regenerating
/// the 1024-byte address block (two compression calls on a zero block and
/// the position descriptor) every 128 couples.
AddressCouple theta_i_next(AddressStream& stream, const Position& pos, const Params& params);

/// Reference lane: j2 mod lanes, pinned to the current lane on the first
/// slice of the first pass.
std::uint32_t map_lane(std::uint32_t j2, const Position& pos, const Params& params) noexcept;

/// Candidate set R, described as a run of columns in construction order
/// starting at `start` and wrapping modulo the lane length.
struct CandidateWindow {
    std::uint32_t lane = 0;
    std::uint32_t start = 0;
    std::uint32_t size = 0;
    std::uint32_t lane_length = 0;

    std::uint32_t column_at(std::uint32_t rank) const noexcept {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(start) + rank) % lane_length);
    }
};

/// Builds R for the position. Same lane: everything visible in the current
/// 3-slice horizon plus the columns already written in this segment, minus
/// the lane-previous block. Other lane: the 3 segments finished before the
/// current slice (fewer on the first pass), minus the most recent block
/// when the position is the first column of its segment.
CandidateWindow build_window(const Position& pos, std::uint32_t ref_lane, const Params& params);

/// Rank of the chosen candidate: size - 1 - (size * (j1^2 >> 32) >> 32),
/// computed in exact 64-bit arithmetic. Skews toward recent blocks.
std::uint32_t select_index(std::uint32_t j1, std::uint32_t window_size) noexcept;

struct Reference {
    std::uint32_t lane = 0;
    std::uint32_t column = 0;
};

/// Full resolution for one block: addressing couple, lane, window, rank.
/// stream must be present exactly for the data-independent variant.
Reference resolve_reference(const Position& pos, const Params& params,
                            const Block& prev, AddressStream* stream);

}  // namespace argon2::indexing

#endif
