#pragma once

#include "sandpile/configuration.hpp"
#include "sandpile/rules.hpp"

#include <cstdint>
#include <vector>

namespace sandpile {

/// Runs the model from `start` until a fixed point, choosing among the
/// enabled moves at random. The schedule is drawn from std::mt19937_64 seeded
/// with `seed`, taking move `draw % moves.size()` of the (direction, index)
/// ordered move list, so a given seed yields the same trajectory everywhere.
/// The result starts with `start` and ends with a fixed point.
std::vector<Configuration> evolve(const Configuration& start, Model m, std::uint64_t seed = 0);

}  // namespace sandpile
