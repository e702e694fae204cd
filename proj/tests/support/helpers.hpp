#pragma once

#include "support/oracle.hpp"

#include <sandpile/configuration.hpp>

#include <random>
#include <vector>

namespace testing {

inline sandpile::Configuration to_config(const oracle::Pile& p)
{
    return sandpile::Configuration(std::vector<sandpile::Height>(p.begin(), p.end()));
}

inline oracle::Pile to_pile(const sandpile::Configuration& c)
{
    return {c.heights().begin(), c.heights().end()};
}

// Uniformly random composition of n: each of the n-1 gaps is a cut with
// probability 1/2.
inline sandpile::Configuration random_composition(int n, std::mt19937_64& rng)
{
    std::vector<sandpile::Height> h;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
        if (rng() & 1U) {
            h.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    h.push_back(run);
    return sandpile::Configuration(std::move(h));
}

}  // namespace testing
