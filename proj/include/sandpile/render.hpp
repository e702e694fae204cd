#pragma once

#include "sandpile/configuration.hpp"

#include <span>
#include <string>
#include <vector>

namespace sandpile {

inline constexpr char kGrain = '#';
inline constexpr char kEmpty = '.';

/// Rows of the pile drawn on a grid, top row first, one character per
/// column: '#' for a grain, '.' for an empty cell.
std::vector<std::string> render_rows(const Configuration& c);

/// render_rows joined with newlines, each row newline-terminated.
std::string render_ascii(const Configuration& c);

/// Several piles bottom-aligned next to each other, separated by `gap`
/// blank columns. Shorter piles are padded with spaces above.
std::string render_side_by_side(std::span<const Configuration> shapes, std::size_t gap = 3);

}  // namespace sandpile
