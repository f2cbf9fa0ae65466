#include "argon2/core.hpp"

#include <cassert>
#include <cstring>

#include "argon2/blake2b.hpp"
#include "argon2/compress.hpp"
#include "argon2/errors.hpp"
#include "argon2/indexing.hpp"
#include "argon2/secure_wipe.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace argon2 {

MemoryMatrix::MemoryMatrix(std::uint32_t lanes, std::uint32_t lane_length)
    : lanes_(lanes), lane_length_(lane_length),
      blocks_(static_cast<std::size_t>(lanes) * lane_length) {}

Block& MemoryMatrix::at(std::uint32_t lane, std::uint32_t column) noexcept {
    assert(lane < lanes_ && column < lane_length_);
    return blocks_[static_cast<std::size_t>(lane) * lane_length_ + column];
}

const Block& MemoryMatrix::at(std::uint32_t lane, std::uint32_t column) const noexcept {
    assert(lane < lanes_ && column < lane_length_);
    return blocks_[static_cast<std::size_t>(lane) * lane_length_ + column];
}

void MemoryMatrix::wipe() noexcept {
    secure_zero(blocks_.data(), blocks_.size() * sizeof(Block));
}

void compute_h0(std::span<std::uint8_t, 64> out, const Params& params,
                std::span<const std::uint8_t> password,
                std::span<const std::uint8_t> salt) {
    Blake2b state(64);
    std::uint8_t word[4];
    auto put32 = [&](std::uint32_t v) {
        store32_le(word, v);
        state.update(word);
    };
    auto put_sized = [&](std::span<const std::uint8_t> data) {
        put32(static_cast<std::uint32_t>(data.size()));
        state.update(data);
    };

    put32(params.lanes);
    put32(params.tag_len);
    put32(params.memory_kib);
    put32(params.passes);
    put32(Params::kVersion);
    put32(static_cast<std::uint32_t>(params.variant));
    put_sized(password);
    put_sized(salt);
    put_sized(params.secret);
    put_sized(params.ad);
    state.final(out);
}

void init_first_blocks(MemoryMatrix& matrix, const Params& params,
                       std::span<const std::uint8_t, 64> h0) {
    std::uint8_t seed[72];  // H0 || lane || block-counter
    std::memcpy(seed, h0.data(), 64);
    std::array<std::uint8_t, kBlockBytes> raw;
    for (std::uint32_t lane = 0; lane < params.lanes; ++lane) {
        store32_le(seed + 64, lane);
        for (std::uint32_t idx = 0; idx < 2; ++idx) {
            store32_le(seed + 68, idx);
            h_prime(seed, raw);
            matrix.at(lane, idx) = Block::from_bytes(raw);
        }
    }
    secure_zero(seed, sizeof(seed));
    secure_zero(raw.data(), raw.size());
}

void fill_segment(MemoryMatrix& matrix, const Params& params, std::uint32_t pass,
                  std::uint32_t lane, std::uint32_t slice,
                  const FillObserver* observer) {
    const std::uint32_t seg = params.segment_length;
    const std::uint32_t q = params.lane_length;

    indexing::AddressStream stream;
    indexing::AddressStream* stream_ptr =
        params.variant == Variant::data_independent ? &stream : nullptr;

    std::uint32_t first = slice * seg;
    if (pass == 0 && slice == 0) {
        first = 2;  // columns 0 and 1 come from init_first_blocks
    }

    for (std::uint32_t column = first; column < (slice + 1) * seg; ++column) {
        const std::uint32_t prev_col = column == 0 ? q - 1 : column - 1;
        const Block& prev = matrix.at(lane, prev_col);
        const Position pos{pass, lane, slice, column};
        const auto ref = indexing::resolve_reference(pos, params, prev, stream_ptr);
        matrix.at(lane, column) = compress_g(prev, matrix.at(ref.lane, ref.column));
        if (observer && observer->on_reference) {
            observer->on_reference(pos, ref.lane, ref.column);
        }
    }
}

void fill_memory(MemoryMatrix& matrix, const Params& params,
                 std::span<const std::uint8_t, 64> h0, const Execution& exec,
                 const FillObserver* observer) {
    if (observer != nullptr && exec.mode != FillMode::sequential) {
        // Observed fills need a defined event order.
        throw std::logic_error("fill observers require the sequential mode");
    }

    init_first_blocks(matrix, params, h0);

    const bool parallel = exec.mode == FillMode::lane_parallel && params.lanes > 1;
    int threads = exec.threads;
#ifdef _OPENMP
    if (threads <= 0) {
        threads = omp_get_max_threads();
    }
#else
    threads = 1;
#endif
    (void)threads;
    (void)parallel;

    for (std::uint32_t pass = 0; pass < params.passes; ++pass) {
        for (std::uint32_t slice = 0; slice < 4; ++slice) {
            // Segments of one slice touch disjoint lanes and read only
            // slices finished before this loop; the implicit barrier at the
            // end of the worksharing loop separates consecutive slices.
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads) if (parallel)
#endif
            for (std::int64_t lane = 0; lane < static_cast<std::int64_t>(params.lanes);
                 ++lane) {
                fill_segment(matrix, params, pass, static_cast<std::uint32_t>(lane),
                             slice, observer);
            }
        }
        if (observer && observer->on_pass_complete) {
            observer->on_pass_complete(pass);
        }
    }
}

Tag finalize(const MemoryMatrix& matrix, std::uint32_t tag_len, Block& scratch) {
    const std::uint32_t last = matrix.lane_length() - 1;
    scratch = matrix.at(0, last);
    for (std::uint32_t lane = 1; lane < matrix.lanes(); ++lane) {
        scratch ^= matrix.at(lane, last);
    }
    auto bytes = scratch.to_bytes();
    Tag tag = h_prime(bytes, tag_len);
    secure_zero(bytes.data(), bytes.size());
    secure_zero(&scratch, sizeof(scratch));
    return tag;
}

Tag finalize(const MemoryMatrix& matrix, std::uint32_t tag_len) {
    Block scratch;
    return finalize(matrix, tag_len, scratch);
}

Tag Workspace::run(Params& params, std::span<std::uint8_t> password,
                   std::span<const std::uint8_t> salt, const Flags& flags,
                   const Execution& exec, const FillObserver* observer) {
    params = validate_params(params);
    if (salt.empty()) {
        throw ParamError("salt required");
    }

    compute_h0(h0_, params, password, salt);
    if (flags.clear_password && !password.empty()) {
        secure_zero(password.data(), password.size());
    }
    if (flags.clear_secret && !params.secret.empty()) {
        secure_zero(params.secret.data(), params.secret.size());
    }

    matrix_.emplace(params.lanes, params.lane_length);
    fill_memory(*matrix_, params, h0_, exec, observer);
    Tag tag = finalize(*matrix_, params.tag_len, final_block_);

    if (flags.clear_memory) {
        matrix_->wipe();
    }
    secure_zero(h0_.data(), h0_.size());
    return tag;
}

Tag hash(Params& params, std::span<std::uint8_t> password,
         std::span<const std::uint8_t> salt, const Flags& flags,
         const Execution& exec) {
    Workspace workspace;
    return workspace.run(params, password, salt, flags, exec);
}

bool verify(Params& params, std::span<std::uint8_t> password,
            std::span<const std::uint8_t> salt, const Flags& flags,
            std::span<const std::uint8_t> expected, const Execution& exec) {
    params = validate_params(params);
    if (expected.size() != params.tag_len) {
        throw ParamError("expected tag length does not match tag_len");
    }
    Tag actual = hash(params, password, salt, flags, exec);
    return constant_time_equal(actual, expected);
}

}  // namespace argon2
