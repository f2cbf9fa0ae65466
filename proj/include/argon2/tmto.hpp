#ifndef ARGON2_TMTO_HPP
#define ARGON2_TMTO_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "argon2/params.hpp"

namespace argon2::tmto {

/// Largest instance the lab accepts (blocks). Penalty measurement is a desk
/// experiment, not a production code path.
inline constexpr std::uint32_t kMaxLabBlocks = 4096;

enum class PolicyKind {
    full,              // retain every block
    keep_every_kth,    // retain columns divisible by k, plus segment heads
    keep_segment_heads // retain only the first column of every segment
};

/// Deterministic retain/discard rule over (pass, lane, column).
struct StoragePolicy {
    PolicyKind kind = PolicyKind::full;
    std::uint32_t k = 1;

    static StoragePolicy full() { return {PolicyKind::full, 1}; }
    static StoragePolicy every_kth(std::uint32_t k) { return {PolicyKind::keep_every_kth, k}; }
    static StoragePolicy segment_heads() { return {PolicyKind::keep_segment_heads, 1}; }

    bool retains(std::uint32_t column, std::uint32_t segment_length) const noexcept;
    std::string name() const;
};

struct TradeoffMetrics {
    double alpha = 1;  // peak retained blocks / block_count
    double c = 1;      // compression calls / baseline compression calls
    double d = 1;      // deepest recomputation chain (baseline fill = 1)
    double g = 1;      // 1 / (alpha * d)
    std::string policy;
    std::string params_fingerprint;
};

/// Penalties of the ranking tradeoff attack on the data-dependent variant,
/// as reported in the attack literature. Printed next to measured values as
/// a reference line only; the cost models differ.
struct ReferencePenalty {
    double alpha;
    double c;
    double d;
};
inline constexpr ReferencePenalty kRankingAttackReference[] = {
    {1.0 / 2, 1.5, 1.5},
    {1.0 / 3, 4.0, 2.8},
    {1.0 / 4, 20.2, 5.5},
};

struct TraceEvent {
    Position pos;
    std::uint32_t ref_lane = 0;
    std::uint32_t ref_column = 0;
};

struct AccessTrace {
    std::vector<TraceEvent> events;
};

/// Runs the fill storing only policy-retained blocks; discarded references
/// are recomputed from the nearest retained ancestors (memoized within one
/// recomputation tree). The tag must match the full-memory tag bit for bit
/// or the run throws. Returns measured (alpha, C, D, g).
TradeoffMetrics run_reduced(Params params, std::span<const std::uint8_t> password,
                            std::span<const std::uint8_t> salt,
                            const StoragePolicy& policy);

struct GainCurve {
    double g_max = 1;
    std::vector<TradeoffMetrics> table;  // sorted by alpha descending
};

/// Recomputes g = 1/(alpha*D) per point and the maximum over the set.
GainCurve gain_curve(std::vector<TradeoffMetrics> metrics);

struct HardnessPoint {
    double alpha = 1;
    double d = 1;
    double bound = 1;  // 1/alpha
    bool holds = false;
};

struct HardnessReport {
    std::vector<HardnessPoint> points;  // sorted by alpha descending
    bool c_monotone = true;             // C non-increasing in alpha
    bool sufficient_range = false;      // some measurement below alpha = 1
    bool consistent = false;            // D > 1/alpha at the smallest alpha
    std::string summary;
};

HardnessReport hardness_verdict(const std::vector<TradeoffMetrics>& metrics);

/// Full-memory sequential run recording every resolved reference in order.
AccessTrace capture_trace(Params params, std::span<const std::uint8_t> password,
                          std::span<const std::uint8_t> salt);

/// CSV with header: alpha,C,D,g,policy,params-fingerprint.
std::string format_csv(const std::vector<TradeoffMetrics>& metrics);

/// Human-readable table with the gain curve, the literature reference row
/// and the accounting caveat.
std::string format_report(const std::vector<TradeoffMetrics>& metrics);

std::string params_fingerprint(const Params& params);

}  // namespace argon2::tmto

#endif
