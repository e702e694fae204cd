#pragma once

#include "sandpile/configuration.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sandpile {

/// SPM moves grains rightward only; SSPM lets a grain fall to either side.
enum class Model { SPM, SSPM };

std::string_view to_string(Model m) noexcept;
Model parse_model(std::string_view text);

enum class Direction { Right, Left };

/// A single rule application. `index` is the 0-based column the grain leaves.
struct Move {
    Direction direction = Direction::Right;
    std::size_t index = 0;

    friend auto operator<=>(const Move&, const Move&) = default;
};

std::string to_string(const Move& mv);

/// Thrown when a move is applied where the local rule does not allow it.
class RuleViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct Energy {
    std::int64_t value = 0;

    friend auto operator<=>(const Energy&, const Energy&) = default;
};

using ConfigurationSet = std::set<Configuration>;

/// Height difference toward the neighbour in `dir`; the missing neighbour
/// past either end counts as height 0.
std::int64_t slope(const Configuration& c, std::size_t i, Direction dir);

/// Moves whose slope is at least 2, ordered by (direction, index).
std::vector<Move> enabled_moves(const Configuration& c, Model m);

/// Applies `mv`, which must be enabled under SSPM (equivalently under SPM for
/// rightward moves). Throws RuleViolation otherwise.
Configuration apply_move(const Configuration& c, const Move& mv);

/// As above, additionally rejecting leftward moves under SPM.
Configuration apply_move(const Configuration& c, const Move& mv, Model m);

/// Allocation-free forms over canonical heights for hot loops. The `_into`
/// variants overwrite `out`; apply_move_into requires `mv` to be enabled.
void enabled_moves_into(std::span<const Height> heights, Model m, std::vector<Move>& out);
void apply_move_into(std::span<const Height> heights, const Move& mv, std::vector<Height>& out);

/// Distinct shapes one rule application away, in lexicographic order.
std::vector<Configuration> successors(const Configuration& c, Model m);

/// Union of successors over every member of `s`.
ConfigurationSet frontier_step(const ConfigurationSet& s, Model m);

/// Sum over columns of h(h+1)/2. Throws std::overflow_error if it does
/// not fit in 64 bits.
Energy energy(const Configuration& c);

/// Energy of the single column of n grains, n(n+1)/2.
Energy column_energy(GrainCount n);

bool is_fixed_point(const Configuration& c, Model m);

}  // namespace sandpile
