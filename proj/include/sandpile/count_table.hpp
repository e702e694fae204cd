#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sandpile {

struct CountRow {
    std::int64_t n = 0;
    std::int64_t g1 = 0;
    std::int64_t g2 = 0;
    std::int64_t closed = 0;                ///< floor(sqrt(n))
    std::optional<std::int64_t> bruteforce;  ///< sink count of the SSPM orbit graph of (n)

    /// g1 + g2 and the exhaustive count (when present) agree with `closed`.
    bool consistent() const noexcept;
};

/// One row per n in [1, n_max]. The exhaustive column is filled for
/// n <= bfs_cutoff.
std::vector<CountRow> count_table(std::int64_t n_max, std::int64_t bfs_cutoff);

bool all_consistent(const std::vector<CountRow>& rows) noexcept;

std::string format_count_csv(const std::vector<CountRow>& rows);
std::string format_count_ascii(const std::vector<CountRow>& rows);
std::string format_count_json(const std::vector<CountRow>& rows);

}  // namespace sandpile
