#include "sandpile/trajectory.hpp"

#include <random>

namespace sandpile {

std::vector<Configuration> evolve(const Configuration& start, Model m, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Configuration> path{start};
    while (true) {
        const std::vector<Move> moves = enabled_moves(path.back(), m);
        if (moves.empty()) {
            return path;
        }
        const Move& pick = moves[rng() % moves.size()];
        path.push_back(apply_move(path.back(), pick));
    }
}

}  // namespace sandpile
