#include "argon2/indexing.hpp"

#include <cassert>

#include "argon2/compress.hpp"

namespace argon2::indexing {

AddressCouple theta_d(const Block& prev) noexcept {
    const std::uint64_t w = prev.words[0];
    return {static_cast<std::uint32_t>(w), static_cast<std::uint32_t>(w >> 32)};
}

AddressCouple theta_i_next(AddressStream& stream, const Position& pos, const Params& params) {
    if (stream.cursor >= kBlockWords) {
        ++stream.counter;
        Block input{};
        input.words[0] = pos.pass;
        input.words[1] = pos.lane;
        input.words[2] = pos.slice;
        input.words[3] = params.block_count;
        input.words[4] = params.passes;
        input.words[5] = static_cast<std::uint64_t>(params.variant);
        input.words[6] = stream.counter;
        stream.addresses = compress_g2(Block{}, input);
        stream.cursor = 0;
    }
    const std::uint64_t w = stream.addresses.words[stream.cursor++];
    return {static_cast<std::uint32_t>(w), static_cast<std::uint32_t>(w >> 32)};
}

std::uint32_t map_lane(std::uint32_t j2, const Position& pos, const Params& params) noexcept {
    if (pos.pass == 0 && pos.slice == 0) {
        return pos.lane;
    }
    return j2 % params.lanes;
}

CandidateWindow build_window(const Position& pos, std::uint32_t ref_lane, const Params& params) {
    const std::uint32_t seg = params.segment_length;
    const std::uint32_t in_segment = pos.column - pos.slice * seg;
    const bool first_block = in_segment == 0;

    CandidateWindow window;
    window.lane = ref_lane;
    window.lane_length = params.lane_length;

    if (pos.pass == 0) {
        window.start = 0;
        if (ref_lane == pos.lane) {
            // Everything written so far this pass, minus the previous block.
            window.size = pos.column - 1;
        } else {
            window.size = pos.slice * seg - (first_block ? 1 : 0);
        }
    } else {
        // Chronological run over the 3 slices finished most recently, which
        // wraps across the pass boundary: old-pass segments first.
        window.start = ((pos.slice + 1) % 4) * seg;
        if (ref_lane == pos.lane) {
            window.size = 3 * seg + in_segment - 1;
        } else {
            window.size = 3 * seg - (first_block ? 1 : 0);
        }
    }

    assert(window.size >= 1);  // guaranteed by validated geometry
    return window;
}

std::uint32_t select_index(std::uint32_t j1, std::uint32_t window_size) noexcept {
    std::uint64_t x = (static_cast<std::uint64_t>(j1) * j1) >> 32;
    std::uint64_t y = (static_cast<std::uint64_t>(window_size) * x) >> 32;
    return window_size - 1 - static_cast<std::uint32_t>(y);
}

Reference resolve_reference(const Position& pos, const Params& params,
                            const Block& prev, AddressStream* stream) {
    assert((stream != nullptr) == (params.variant == Variant::data_independent));
    const AddressCouple couple =
        stream ? theta_i_next(*stream, pos, params) : theta_d(prev);
    const std::uint32_t lane = map_lane(couple.j2, pos, params);
    const CandidateWindow window = build_window(pos, lane, params);
    const std::uint32_t z = select_index(couple.j1, window.size);
    return {window.lane, window.column_at(z)};
}

}  // namespace argon2::indexing
