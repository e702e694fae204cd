#include "sandpile/structure.hpp"

#include "sandpile/rules.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace sandpile {

namespace {

void require_positive(std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("grain count must be at least 1, got " + std::to_string(n));
    }
    if (n > (std::numeric_limits<std::int64_t>::max() - 1) / 8) {
        throw std::overflow_error("grain count too large");
    }
}

// Largest p with p*p + p <= n.
std::int64_t double_top_height(std::int64_t n)
{
    return (isqrt(4 * n + 1) - 1) / 2;
}

// Heights 1..m ascending with one extra column of height `extra` merged in.
// extra == 0 adds nothing; extra == m + 1 extends the staircase.
std::vector<Height> staircase(Height m, Height extra)
{
    std::vector<Height> out;
    out.reserve(static_cast<std::size_t>(m) + 1);
    for (Height h = 1; h <= m; ++h) {
        out.push_back(h);
        if (h == extra) {
            out.push_back(h);
        }
    }
    if (extra == m + 1) {
        out.push_back(extra);
    }
    return out;
}

// Left staircase, a flat top of `top_width` columns of height p, mirrored
// right staircase.
Configuration assemble(Height p, std::size_t top_width, Height left_extra, Height right_extra)
{
    std::vector<Height> heights = staircase(p - 1, left_extra);
    heights.insert(heights.end(), top_width, p);
    const std::vector<Height> right = staircase(p - 1, right_extra);
    heights.insert(heights.end(), right.rbegin(), right.rend());
    return ConfigurationBuilder::from_canonical(std::move(heights));
}

}  // namespace

TopSet top(const Configuration& c)
{
    const Height peak = c.max_height();
    const auto h = c.heights();
    TopSet t;
    t.lo = static_cast<std::size_t>(std::find(h.begin(), h.end(), peak) - h.begin());
    t.hi = c.size() - 1 - static_cast<std::size_t>(std::find(h.rbegin(), h.rend(), peak) - h.rbegin());
    t.contiguous = std::all_of(h.begin() + t.lo, h.begin() + t.hi + 1, [peak](Height x) { return x == peak; });
    return t;
}

std::vector<LRSplit> lr_splits(const Configuration& c)
{
    const std::size_t k = c.size();
    // prefix_ok[t]: [0, t) non-decreasing. suffix_ok[t]: [t, k) non-increasing.
    std::vector<bool> prefix_ok(k + 1, true);
    std::vector<bool> suffix_ok(k + 1, true);
    for (std::size_t t = 2; t <= k; ++t) {
        prefix_ok[t] = prefix_ok[t - 1] && c[t - 2] <= c[t - 1];
    }
    for (std::size_t t = k - 1; t-- > 0;) {
        suffix_ok[t] = suffix_ok[t + 1] && c[t] >= c[t + 1];
    }
    std::vector<LRSplit> out;
    for (std::size_t t = 0; t <= k; ++t) {
        if (prefix_ok[t] && suffix_ok[t]) {
            out.push_back({t});
        }
    }
    return out;
}

bool is_crazed(std::span<const Height> heights)
{
    bool seen_plateau = false;
    bool cliff_since_plateau = false;
    std::size_t i = 0;
    while (i < heights.size()) {
        std::size_t j = i;
        while (j + 1 < heights.size() && heights[j + 1] == heights[i]) {
            ++j;
        }
        const std::size_t run = j - i + 1;
        if (run >= 3) {
            return false;
        }
        if (run == 2) {
            if (seen_plateau && !cliff_since_plateau) {
                return false;
            }
            seen_plateau = true;
            cliff_since_plateau = false;
        }
        if (j + 1 < heights.size()) {
            const std::int64_t step = std::int64_t{heights[j + 1]} - heights[j];
            if (step >= 2 || step <= -2) {
                cliff_since_plateau = true;
            }
        }
        i = j + 1;
    }
    return true;
}

bool is_crazed(const Configuration& c, IndexRange range)
{
    if (range.begin > range.end || range.end > c.size()) {
        throw std::out_of_range("index range [" + std::to_string(range.begin) + ", " + std::to_string(range.end) +
                                ") does not fit a pile of " + std::to_string(c.size()) + " columns");
    }
    return is_crazed(c.heights().subspan(range.begin, range.size()));
}

std::vector<LRSplit> crazed_lr_splits(const Configuration& c)
{
    std::vector<LRSplit> out;
    const auto h = c.heights();
    for (const LRSplit& s : lr_splits(c)) {
        if (is_crazed(h.first(s.t)) && is_crazed(h.subspan(s.t))) {
            out.push_back(s);
        }
    }
    return out;
}

std::optional<LRSplit> has_crazed_lr(const Configuration& c)
{
    const auto h = c.heights();
    for (const LRSplit& s : lr_splits(c)) {
        if (is_crazed(h.first(s.t)) && is_crazed(h.subspan(s.t))) {
            return s;
        }
    }
    return std::nullopt;
}

bool spm_member(const Configuration& c)
{
    const auto h = c.heights();
    return std::is_sorted(h.begin(), h.end(), std::greater<>{}) && is_crazed(h);
}

Configuration spm_fixed_point(std::int64_t n)
{
    require_positive(n);
    // Largest p with p(p+1)/2 <= n; the remainder q lies in [0, p].
    const std::int64_t p = (isqrt(8 * n + 1) - 1) / 2;
    const std::int64_t q = n - p * (p + 1) / 2;
    if (p > std::numeric_limits<Height>::max()) {
        throw std::overflow_error("fixed point height exceeds the supported range");
    }
    std::vector<Height> heights;
    heights.reserve(static_cast<std::size_t>(p) + 1);
    for (auto h = static_cast<Height>(p); h >= 1; --h) {
        heights.push_back(h);
        if (h == q) {
            heights.push_back(h);
        }
    }
    return ConfigurationBuilder::from_canonical(std::move(heights));
}

std::int64_t isqrt(std::int64_t n)
{
    if (n < 0) {
        throw std::invalid_argument("isqrt of a negative number");
    }
    // Bitwise digit-by-digit square root.
    auto x = static_cast<std::uint64_t>(n);
    std::uint64_t result = 0;
    std::uint64_t bit = std::uint64_t{1} << 62;
    while (bit > x) {
        bit >>= 2;
    }
    while (bit != 0) {
        if (x >= result + bit) {
            x -= result + bit;
            result = (result >> 1) + bit;
        } else {
            result >>= 1;
        }
        bit >>= 2;
    }
    return static_cast<std::int64_t>(result);
}

std::int64_t g1_count(std::int64_t n)
{
    require_positive(n);
    const std::int64_t p = isqrt(n);
    const std::int64_t u = n - p * p;
    if (u <= p - 1) {
        return n - p * p + 1;
    }
    if (p <= u && u <= 2 * p - 1) {
        return 2 * p - n + p * p - 1;
    }
    return 0;
}

std::int64_t g2_count(std::int64_t n)
{
    require_positive(n);
    const std::int64_t p = double_top_height(n);
    const std::int64_t v = n - p * p - p;
    if (v <= p - 1) {
        return n - p * p - p + 1;
    }
    if (v == p) {
        return p;
    }
    // p + 1 <= v <= 2p + 1 by the choice of p.
    return 3 * p - n + p * p + 1;
}

FixedPointCensus fixed_point_counts(std::int64_t n, bool with_shapes)
{
    FixedPointCensus census;
    census.n = n;
    census.g1 = g1_count(n);
    census.g2 = g2_count(n);
    census.total = census.g1 + census.g2;
    if (with_shapes) {
        census.shapes = enumerate_fixed_points(n);
    }
    return census;
}

std::vector<Configuration> enumerate_fixed_points(std::int64_t n)
{
    require_positive(n);
    if (n > std::numeric_limits<Height>::max()) {
        throw std::overflow_error("grain count exceeds the supported column height");
    }
    std::vector<Configuration> shapes;

    // Single-column top: pyramid of p*p grains, u spare grains split between
    // the two flanks, each flank holding at most p - 1.
    {
        const auto p = static_cast<Height>(isqrt(n));
        const auto u = static_cast<Height>(n - std::int64_t{p} * p);
        for (Height left = 0; left <= p - 1; ++left) {
            const Height right = u - left;
            if (right >= 0 && right <= p - 1) {
                shapes.push_back(assemble(p, 1, left, right));
            }
        }
    }

    // Two-column top: pyramid of p*p + p grains, v spare grains, each flank
    // holding at most p. A flank holding p widens the top.
    {
        const auto p = static_cast<Height>(double_top_height(n));
        const auto v = static_cast<Height>(n - std::int64_t{p} * p - p);
        if (p >= 1) {
            for (Height left = 0; left <= p; ++left) {
                const Height right = v - left;
                if (right >= 0 && right <= p) {
                    shapes.push_back(assemble(p, 2, left, right));
                }
            }
        }
    }

    std::sort(shapes.begin(), shapes.end());
    shapes.erase(std::unique(shapes.begin(), shapes.end()), shapes.end());
    return shapes;
}

std::size_t plateau_count(std::span<const Height> heights)
{
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < heights.size()) {
        std::size_t j = i;
        while (j + 1 < heights.size() && heights[j + 1] == heights[i]) {
            ++j;
        }
        if (j > i) {
            ++count;
        }
        i = j + 1;
    }
    return count;
}

bool has_cliff(std::span<const Height> heights)
{
    for (std::size_t i = 0; i + 1 < heights.size(); ++i) {
        const std::int64_t d = std::int64_t{heights[i]} - heights[i + 1];
        if (d >= 2 || d <= -2) {
            return true;
        }
    }
    return false;
}

}  // namespace sandpile
