#ifndef ARGON2_CORE_HPP
#define ARGON2_CORE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "argon2/block.hpp"
#include "argon2/params.hpp"

namespace argon2 {

/// lanes x lane_length pool of blocks, one contiguous allocation.
class MemoryMatrix {
  public:
    MemoryMatrix(std::uint32_t lanes, std::uint32_t lane_length);

    Block& at(std::uint32_t lane, std::uint32_t column) noexcept;
    const Block& at(std::uint32_t lane, std::uint32_t column) const noexcept;

    std::span<Block> pool() noexcept { return blocks_; }
    std::span<const Block> pool() const noexcept { return blocks_; }

    std::uint32_t lanes() const noexcept { return lanes_; }
    std::uint32_t lane_length() const noexcept { return lane_length_; }

    void wipe() noexcept;

  private:
    std::uint32_t lanes_;
    std::uint32_t lane_length_;
    std::vector<Block> blocks_;
};

enum class FillMode {
    sequential,    // lane 0 segment first, then lane 1, ...
    lane_parallel  // segments of one slice run concurrently
};

struct Execution {
    FillMode mode = FillMode::lane_parallel;
    int threads = 0;  // 0 = runtime default
};

/// Test/instrumentation hooks. Observed fills require sequential mode so
/// the event order is well defined.
struct FillObserver {
    std::function<void(const Position&, std::uint32_t ref_lane, std::uint32_t ref_column)>
        on_reference;
    std::function<void(std::uint32_t pass)> on_pass_complete;
};

/// 512-bit initial hash over every parameter, with length-prefixed
/// password, salt, secret and associated data.
void compute_h0(std::span<std::uint8_t, 64> out, const Params& params,
                std::span<const std::uint8_t> password,
                std::span<const std::uint8_t> salt);

/// First two blocks of every lane from H0, lane index and block counter.
void init_first_blocks(MemoryMatrix& matrix, const Params& params,
                       std::span<const std::uint8_t, 64> h0);

/// One segment of one pass. All segments of earlier slices (and all earlier
/// passes) must be complete. Later passes overwrite in place.
void fill_segment(MemoryMatrix& matrix, const Params& params, std::uint32_t pass,
                  std::uint32_t lane, std::uint32_t slice,
                  const FillObserver* observer = nullptr);

/// init_first_blocks plus every pass and slice in order. Lane-parallel and
/// sequential modes produce bit-identical matrices.
void fill_memory(MemoryMatrix& matrix, const Params& params,
                 std::span<const std::uint8_t, 64> h0, const Execution& exec = {},
                 const FillObserver* observer = nullptr);

/// XOR of the last column hashed to tag_len bytes. The XOR accumulator is
/// wiped; `scratch` variants leave the (zeroed) accumulator inspectable.
Tag finalize(const MemoryMatrix& matrix, std::uint32_t tag_len);
Tag finalize(const MemoryMatrix& matrix, std::uint32_t tag_len, Block& scratch);

/// One hashing run with its working state kept inspectable afterwards:
/// the block pool, the H0 scratch and the final-column XOR scratch stay
/// alive (wiped per the flags / always for the scratches) until the next
/// run or destruction.
class Workspace {
  public:
    Tag run(Params& params, std::span<std::uint8_t> password,
            std::span<const std::uint8_t> salt, const Flags& flags = {},
            const Execution& exec = {}, const FillObserver* observer = nullptr);

    const MemoryMatrix& matrix() const { return *matrix_; }
    bool has_matrix() const noexcept { return matrix_.has_value(); }
    std::span<const std::uint8_t, 64> h0_scratch() const noexcept { return h0_; }
    const Block& final_scratch() const noexcept { return final_block_; }

  private:
    std::optional<MemoryMatrix> matrix_;
    std::array<std::uint8_t, 64> h0_{};
    Block final_block_{};
};

/// Whole pipeline: validate, H0, fill, finalize, wipe. `params` is taken by
/// reference so clear_secret can zero the caller's secret in place; the
/// password span is zeroed in place under clear_password, immediately after
/// H0 absorption. Derived geometry fields are filled in on return.
Tag hash(Params& params, std::span<std::uint8_t> password,
         std::span<const std::uint8_t> salt, const Flags& flags = {},
         const Execution& exec = {});

/// Recomputes the tag and compares in constant time. The expected tag must
/// be exactly tag_len bytes (a length mismatch is an error, not `false`).
bool verify(Params& params, std::span<std::uint8_t> password,
            std::span<const std::uint8_t> salt, const Flags& flags,
            std::span<const std::uint8_t> expected, const Execution& exec = {});

}  // namespace argon2

#endif
