#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "argon2/indexing.hpp"
#include "argon2/params.hpp"
#include "test_util.hpp"

using namespace argon2;
using namespace argon2::indexing;

namespace {

Params small_params(std::uint32_t lanes, std::uint32_t memory_kib, std::uint32_t passes,
                    Variant variant = Variant::data_dependent) {
    Params p;
    p.lanes = lanes;
    p.memory_kib = memory_kib;
    p.passes = passes;
    p.tag_len = 32;
    p.variant = variant;
    return validate_params(p);
}

}  // namespace

TEST_CASE("theta_d reads the first eight bytes little-endian") {
    Block prev{};
    std::array<std::uint8_t, kBlockBytes> raw{};
    raw[0] = 0x01;
    raw[4] = 0x02;
    prev = Block::from_bytes(raw);
    auto couple = theta_d(prev);
    CHECK(couple.j1 == 1);
    CHECK(couple.j2 == 2);

    CHECK(theta_d(Block{}).j1 == 0);
    CHECK(theta_d(Block{}).j2 == 0);

    // Bytes past the first eight are ignored.
    auto rng = testutil::seeded_rng(20);
    Block a = testutil::random_block(rng);
    Block b = a;
    b.words[1] ^= 0xff00;  // byte 9
    auto ca = theta_d(a);
    auto cb = theta_d(b);
    CHECK(ca.j1 == cb.j1);
    CHECK(ca.j2 == cb.j2);
}

TEST_CASE("select_index examples and bounds") {
    CHECK(select_index(0, 1) == 0);
    CHECK(select_index(0, 100) == 99);
    CHECK(select_index(0xffffffffu, 100) == 0);

    auto rng = testutil::seeded_rng(21);
    for (int i = 0; i < 1000; ++i) {
        std::uint32_t j1 = static_cast<std::uint32_t>(rng());
        CHECK(select_index(j1, 1) == 0);
        std::uint32_t size = 1 + static_cast<std::uint32_t>(rng() % 4096);
        std::uint32_t z = select_index(j1, size);
        CHECK(z < size);
    }
}

TEST_CASE("select_index is monotone non-increasing in j1") {
    for (std::uint32_t size : {2u, 7u, 1024u, 100000u}) {
        std::uint32_t prev = size;  // above any valid z
        for (std::uint64_t j1 = 0; j1 <= 0xffffffffull; j1 += 0x001fffffull) {
            std::uint32_t z = select_index(static_cast<std::uint32_t>(j1), size);
            CHECK(z <= prev);
            prev = z;
        }
    }
}

TEST_CASE("select_index bias matches the 2/3 expectation") {
    auto rng = testutil::seeded_rng(22);
    const int n = 100000;
    double sum = 0;
    for (int i = 0; i < n; ++i) {
        sum += select_index(static_cast<std::uint32_t>(rng()), 1024) / 1024.0;
    }
    double mean = sum / n;
    CHECK(mean > 0.63);
    CHECK(mean < 0.70);
}

TEST_CASE("map_lane pins the first slice of the first pass") {
    Params params = small_params(4, 64, 2);
    CHECK(map_lane(7, {1, 0, 1, 0}, params) == 3);
    CHECK(map_lane(12345, {0, 2, 0, 1}, params) == 2);
    CHECK(map_lane(8, {0, 1, 2, 9}, params) == 0);
}

TEST_CASE("theta_i_next regenerates every 128 couples with a fresh counter") {
    Params params = small_params(1, 1024, 1, Variant::data_independent);
    Position pos{0, 0, 1, 70};

    AddressStream stream;
    std::vector<AddressCouple> couples;
    for (int i = 0; i < 300; ++i) {
        couples.push_back(theta_i_next(stream, pos, params));
    }
    CHECK(stream.counter == 3);  // 300 couples span three address blocks

    // Same segment, same params: the stream replays identically.
    AddressStream replay;
    for (int i = 0; i < 300; ++i) {
        auto c = theta_i_next(replay, pos, params);
        CHECK(c.j1 == couples[static_cast<std::size_t>(i)].j1);
        CHECK(c.j2 == couples[static_cast<std::size_t>(i)].j2);
    }

    // The first address block equals the reference construction: the
    // two-step compression of a zero block with the position descriptor.
    refimpl::Bytes descriptor(1024, 0);
    auto put64 = [&](std::size_t off, std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            descriptor[off + static_cast<std::size_t>(i)] =
                static_cast<std::uint8_t>(v >> (8 * i));
        }
    };
    put64(0, pos.pass);
    put64(8, pos.lane);
    put64(16, pos.slice);
    put64(24, params.block_count);
    put64(32, params.passes);
    put64(40, static_cast<std::uint64_t>(params.variant));
    put64(48, 1);  // counter of the first generated block
    refimpl::Bytes expected =
        refimpl::compress_twice(refimpl::Bytes(1024, 0), descriptor);

    AddressStream one;
    theta_i_next(one, pos, params);
    CHECK(testutil::block_bytes(one.addresses) == expected);
}

TEST_CASE("theta_i_next differs across segments") {
    Params params = small_params(2, 64, 2, Variant::data_independent);
    auto first_block_of = [&](Position pos) {
        AddressStream stream;
        theta_i_next(stream, pos, params);
        return stream.addresses;
    };
    Block a = first_block_of({0, 0, 1, 4});
    Block b = first_block_of({0, 1, 1, 4});
    Block c = first_block_of({0, 0, 2, 8});
    Block d = first_block_of({1, 0, 1, 4});
    CHECK(a != b);
    CHECK(a != c);
    CHECK(a != d);
    CHECK(b != c);
}

TEST_CASE("build_window on the first pass") {
    // Same lane at j = 2: only column 0 qualifies.
    Params p1 = small_params(1, 8, 1);
    CandidateWindow w = build_window({0, 0, 0, 2}, 0, p1);
    CHECK(w.size == 1);
    CHECK(w.column_at(0) == 0);

    // q = 16: other lane, slice 1, first column: lane columns {0..3} minus
    // the most recent.
    Params p2 = small_params(2, 32, 1);
    REQUIRE(p2.lane_length == 16);
    w = build_window({0, 0, 1, 4}, 1, p2);
    CHECK(w.size == 3);
    CHECK(w.column_at(0) == 0);
    CHECK(w.column_at(2) == 2);

    // q = 16: other lane, slice 2, non-first column: both finished slices.
    w = build_window({0, 0, 2, 9}, 1, p2);
    CHECK(w.size == 8);
    CHECK(w.column_at(7) == 7);
}

TEST_CASE("build_window on later passes wraps across the pass boundary") {
    Params params = small_params(2, 32, 2);  // q = 16, segment 4
    // Other lane, pass 1, slice 1, first column of segment: the window runs
    // over slices 2,3 of the previous pass then slice 0 of this one, minus
    // the most recent block.
    CandidateWindow w = build_window({1, 0, 1, 4}, 1, params);
    CHECK(w.size == 11);
    CHECK(w.column_at(0) == 8);    // oldest: first column of slice 2, previous pass
    CHECK(w.column_at(7) == 15);   // last old-pass block
    CHECK(w.column_at(8) == 0);    // wraps into the current pass
    CHECK(w.column_at(10) == 2);   // column 3 (most recent) was excluded

    // Same lane, pass 1, slice 0, first column: previous three slices minus
    // the lane-previous block (column 15).
    w = build_window({1, 0, 0, 0}, 0, params);
    CHECK(w.size == 11);
    CHECK(w.column_at(0) == 4);
    CHECK(w.column_at(10) == 14);

    // Same lane mid-segment: three slices plus current progress minus one.
    w = build_window({1, 1, 2, 10}, 1, params);
    CHECK(w.size == 3 * 4 + 2 - 1);
    CHECK(w.column_at(0) == 12);
}

TEST_CASE("resolve_reference with a singleton window") {
    Params params = small_params(1, 16, 1);  // q = 16, segment 4
    auto rng = testutil::seeded_rng(23);
    Block prev = testutil::random_block(rng);
    auto ref = resolve_reference({0, 0, 0, 2}, params, prev, nullptr);
    CHECK(ref.lane == 0);
    CHECK(ref.column == 0);
}

TEST_CASE("resolved references stay inside the window for random couples") {
    Params params = small_params(4, 256, 3);  // q = 64, segment 16
    auto rng = testutil::seeded_rng(24);
    for (int trial = 0; trial < 2000; ++trial) {
        std::uint32_t pass = static_cast<std::uint32_t>(rng() % params.passes);
        std::uint32_t slice = static_cast<std::uint32_t>(rng() % 4);
        std::uint32_t lane = static_cast<std::uint32_t>(rng() % params.lanes);
        std::uint32_t in_seg = static_cast<std::uint32_t>(rng() % params.segment_length);
        if (pass == 0 && slice == 0) {
            in_seg = 2 + static_cast<std::uint32_t>(rng() % (params.segment_length - 2));
        }
        Position pos{pass, lane, slice, slice * params.segment_length + in_seg};

        Block prev = testutil::random_block(rng);
        auto ref = resolve_reference(pos, params, prev, nullptr);

        CHECK(ref.lane < params.lanes);
        CHECK(ref.column < params.lane_length);
        // Never the block being written, never the lane-previous block.
        const std::uint32_t prev_col =
            pos.column == 0 ? params.lane_length - 1 : pos.column - 1;
        if (ref.lane == pos.lane) {
            CHECK(ref.column != pos.column);
            CHECK(ref.column != prev_col);
        }
        if (pass == 0) {
            // Only finished work is visible on the first pass.
            if (ref.lane == pos.lane) {
                CHECK(ref.column < pos.column);
            } else {
                CHECK(ref.column < slice * params.segment_length);
            }
        }
    }
}
