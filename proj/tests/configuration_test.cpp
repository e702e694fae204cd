#include <doctest.h>

#include <sandpile/configuration.hpp>

#include <stdexcept>
#include <unordered_set>

using sandpile::Configuration;

TEST_CASE("zero columns at either end are trimmed")
{
    const Configuration c(std::vector<sandpile::Height>{0, 0, 3, 1, 0});
    CHECK(c == Configuration{3, 1});
    CHECK(c.size() == 2);
    CHECK(Configuration{0, 2, 2} == Configuration{2, 2, 0, 0});
}

TEST_CASE("invalid piles are rejected")
{
    CHECK_THROWS_AS(Configuration(std::vector<sandpile::Height>{}), std::invalid_argument);
    CHECK_THROWS_AS((Configuration{0, 0}), std::invalid_argument);
    CHECK_THROWS_AS((Configuration{2, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS((Configuration{2, -1}), std::invalid_argument);
    CHECK_THROWS_AS(Configuration::column(0), std::invalid_argument);
}

TEST_CASE("grain count")
{
    CHECK(sandpile::grains(Configuration{8}) == 8);
    CHECK(sandpile::grains(Configuration{3, 2, 2, 1}) == 8);
    CHECK(sandpile::grains(Configuration{1, 1}) == 2);
}

TEST_CASE("ordering is lexicographic on heights")
{
    CHECK(Configuration{1, 1, 2, 1} < Configuration{1, 2, 1, 1});
    CHECK(Configuration{1, 2} < Configuration{1, 2, 1});
    CHECK(Configuration{2} > Configuration{1, 9});
}

TEST_CASE("text round trip")
{
    const Configuration c{3, 2, 2, 1};
    CHECK(sandpile::to_string(c) == "3,2,2,1");
    CHECK(sandpile::parse_configuration("3,2,2,1") == c);
    CHECK(sandpile::parse_configuration(" 3, 2 ,2,1 ") == c);
    CHECK(sandpile::parse_configuration("0,4,0") == Configuration{4});
    CHECK_THROWS_AS(sandpile::parse_configuration("3,,1"), std::invalid_argument);
    CHECK_THROWS_AS(sandpile::parse_configuration("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(sandpile::parse_configuration(""), std::invalid_argument);
}

TEST_CASE("equal shapes hash equally")
{
    std::unordered_set<Configuration> seen;
    seen.insert(Configuration{1, 2, 1});
    seen.insert(Configuration(std::vector<sandpile::Height>{0, 1, 2, 1}));
    seen.insert(Configuration{1, 1, 2});
    CHECK(seen.size() == 2);
}
