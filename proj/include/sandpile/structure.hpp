#pragma once

#include "sandpile/configuration.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sandpile {

/// Columns of maximal height, as an inclusive 0-based range.
///
/// `contiguous` is false when some column strictly inside [lo, hi] is lower
/// than the maximum; [lo, hi] is then the hull of the maximal columns.
struct TopSet {
    std::size_t lo = 0;
    std::size_t hi = 0;
    bool contiguous = true;

    std::size_t size() const noexcept { return hi - lo + 1; }
    bool contains(std::size_t i) const noexcept { return lo <= i && i <= hi; }

    friend bool operator==(const TopSet&, const TopSet&) = default;
};

/// Split point of an LR-decomposition: the left zone is columns [0, t), the
/// right zone [t, k). t == 0 leaves the left zone empty.
struct LRSplit {
    std::size_t t = 0;

    friend auto operator<=>(const LRSplit&, const LRSplit&) = default;
};

/// Half-open range [begin, end) of column indices.
struct IndexRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const noexcept { return end - begin; }
};

struct FixedPointCensus {
    std::int64_t n = 0;
    std::int64_t g1 = 0;     ///< fixed points whose top has one column
    std::int64_t g2 = 0;     ///< fixed points whose top has two or more
    std::int64_t total = 0;  ///< g1 + g2
    std::optional<std::vector<Configuration>> shapes;
};

TopSet top(const Configuration& c);

/// Every t for which [0, t) is non-decreasing and [t, k) is non-increasing,
/// ascending. Empty iff `c` is not LR-decomposable.
std::vector<LRSplit> lr_splits(const Configuration& c);

/// True iff any two plateaus of `heights` are separated by a cliff. A run of
/// three or more equal heights counts as two adjacent plateaus.
bool is_crazed(std::span<const Height> heights);

/// is_crazed restricted to `range`; throws std::out_of_range if the range
/// does not lie inside `c`.
bool is_crazed(const Configuration& c, IndexRange range);

/// Splits of `c` whose two zones are both crazed, ascending.
std::vector<LRSplit> crazed_lr_splits(const Configuration& c);

/// The smallest crazed split, if any. A shape is reachable from the single
/// column of its grains under SSPM exactly when this is non-empty.
std::optional<LRSplit> has_crazed_lr(const Configuration& c);

/// Membership in the SPM orbit graph of (grains(c)): non-increasing and
/// crazed over the whole pile.
bool spm_member(const Configuration& c);

/// The unique SPM fixed point reached from (n).
Configuration spm_fixed_point(std::int64_t n);

/// Largest p with p*p <= n, computed without floating point.
std::int64_t isqrt(std::int64_t n);

/// Closed-form count of SSPM fixed points of (n) with a one-column top.
std::int64_t g1_count(std::int64_t n);

/// Closed-form count of SSPM fixed points of (n) with a wider top.
std::int64_t g2_count(std::int64_t n);

/// g1, g2 and their sum. Shapes are attached when `with_shapes` is set.
FixedPointCensus fixed_point_counts(std::int64_t n, bool with_shapes = false);

/// All SSPM fixed points reachable from (n), generated directly from the
/// staircase templates, in lexicographic order.
std::vector<Configuration> enumerate_fixed_points(std::int64_t n);

/// Number of maximal equal-height runs of length >= 2.
std::size_t plateau_count(std::span<const Height> heights);

/// True iff some adjacent pair differs by 2 or more.
bool has_cliff(std::span<const Height> heights);

}  // namespace sandpile
