#include <doctest.h>

#include "support/helpers.hpp"
#include "support/oracle.hpp"

#include <sandpile/rules.hpp>

#include <climits>
#include <random>

using namespace sandpile;
using testing::to_config;
using testing::to_pile;

namespace {

std::vector<Move> moves(std::initializer_list<Move> ms)
{
    return ms;
}

ConfigurationSet set_of(std::initializer_list<Configuration> cs)
{
    return ConfigurationSet(cs);
}

}  // namespace

TEST_CASE("slope uses an empty neighbour past either end")
{
    const Configuration c{3, 1};
    CHECK(slope(c, 0, Direction::Right) == 2);
    CHECK(slope(c, 1, Direction::Right) == 1);
    CHECK(slope(c, 0, Direction::Left) == 3);
    CHECK(slope(c, 1, Direction::Left) == -2);
    CHECK_THROWS_AS(slope(c, 2, Direction::Right), std::out_of_range);
}

TEST_CASE("enabled moves")
{
    CHECK(enabled_moves(Configuration{8}, Model::SSPM) ==
          moves({{Direction::Right, 0}, {Direction::Left, 0}}));
    CHECK(enabled_moves(Configuration{1, 1}, Model::SSPM).empty());
    CHECK(enabled_moves(Configuration{2, 2}, Model::SPM) == moves({{Direction::Right, 1}}));
    CHECK(enabled_moves(Configuration{2, 2}, Model::SSPM) ==
          moves({{Direction::Right, 1}, {Direction::Left, 0}}));
}

TEST_CASE("a slope of exactly 2 enables, 1 does not")
{
    CHECK(enabled_moves(Configuration{3, 1}, Model::SPM) == moves({{Direction::Right, 0}}));
    CHECK(enabled_moves(Configuration{2, 1}, Model::SPM).empty());
    CHECK(enabled_moves(Configuration{1, 1}, Model::SPM).empty());
}

TEST_CASE("apply_move")
{
    CHECK(apply_move(Configuration{4}, {Direction::Left, 0}) == Configuration{1, 3});
    CHECK(apply_move(Configuration{8}, {Direction::Right, 0}) == Configuration{7, 1});
    CHECK(apply_move(Configuration{2, 2}, {Direction::Right, 1}) == Configuration{2, 1, 1});
    CHECK(apply_move(Configuration{1, 4, 1}, {Direction::Left, 1}) == Configuration{2, 3, 1});
}

TEST_CASE("disabled moves are rule violations")
{
    CHECK_THROWS_AS(apply_move(Configuration{1, 1}, {Direction::Right, 0}), RuleViolation);
    CHECK_THROWS_AS(apply_move(Configuration{3, 1}, {Direction::Right, 5}), RuleViolation);
    CHECK_THROWS_AS(apply_move(Configuration{4}, {Direction::Left, 0}, Model::SPM), RuleViolation);
    CHECK(apply_move(Configuration{4}, {Direction::Left, 0}, Model::SSPM) == Configuration{1, 3});
}

TEST_CASE("successors collapse shapes that coincide")
{
    CHECK(successors(Configuration{2}, Model::SSPM) == std::vector<Configuration>{Configuration{1, 1}});
    CHECK(successors(Configuration{8}, Model::SSPM) ==
          std::vector<Configuration>{Configuration{1, 7}, Configuration{7, 1}});
    CHECK(successors(Configuration{5}, Model::SSPM) ==
          std::vector<Configuration>{Configuration{1, 4}, Configuration{4, 1}});
}

TEST_CASE("frontier_step")
{
    CHECK(frontier_step(set_of({Configuration{8}}), Model::SSPM) ==
          set_of({Configuration{7, 1}, Configuration{1, 7}}));
    CHECK(frontier_step({}, Model::SSPM).empty());
    CHECK(frontier_step(set_of({Configuration{2, 1, 1}}), Model::SPM).empty());
    CHECK(frontier_step(set_of({Configuration{3, 1}, Configuration{1, 3}}), Model::SSPM) ==
          set_of({Configuration{2, 2}, Configuration{1, 2, 1}}));
}

TEST_CASE("energy")
{
    CHECK(energy(Configuration{3}).value == 6);
    CHECK(energy(Configuration{2, 1}).value == 4);
    CHECK(energy(Configuration{8}).value == 36);
    CHECK(column_energy(8).value == 36);
    const std::int64_t big = 3'000'000'000;
    CHECK(column_energy(big).value == big / 2 * (big + 1));
    CHECK_THROWS_AS(column_energy(std::int64_t{1} << 33), std::overflow_error);
    CHECK(energy(Configuration{INT32_MAX}).value == std::int64_t{INT32_MAX} * (std::int64_t{INT32_MAX} + 1) / 2);
}

TEST_CASE("fixed points")
{
    CHECK(is_fixed_point(Configuration{1, 2, 1, 1}, Model::SSPM));
    CHECK(is_fixed_point(Configuration{3, 2, 2, 1}, Model::SPM));
    CHECK_FALSE(is_fixed_point(Configuration{3, 2, 2, 1}, Model::SSPM));
    CHECK_FALSE(is_fixed_point(Configuration{2, 2}, Model::SSPM));
}

TEST_CASE("model names")
{
    CHECK(parse_model("spm") == Model::SPM);
    CHECK(parse_model("SSPM") == Model::SSPM);
    CHECK(to_string(Model::SSPM) == "SSPM");
    CHECK_THROWS_AS(parse_model("abelian"), std::invalid_argument);
}

TEST_CASE("successors agree with the reference rewriting on every composition of n <= 12")
{
    for (int n = 1; n <= 12; ++n) {
        for (const oracle::Pile& p : oracle::compositions(n)) {
            for (bool symmetric : {false, true}) {
                std::set<oracle::Pile> got;
                for (const Configuration& d : successors(to_config(p), symmetric ? Model::SSPM : Model::SPM)) {
                    got.insert(to_pile(d));
                }
                REQUIRE(got == oracle::successors(p, symmetric));
            }
        }
    }
}

TEST_CASE("conservation, positivity and energy decrease on random piles")
{
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 60);
        const Configuration c = testing::random_composition(n, rng);
        for (Model m : {Model::SPM, Model::SSPM}) {
            for (const Move& mv : enabled_moves(c, m)) {
                const Configuration d = apply_move(c, mv, m);
                REQUIRE(grains(d) == grains(c));
                for (Height h : d.heights()) {
                    REQUIRE(h >= 1);
                }
                REQUIRE(energy(d) < energy(c));
            }
            REQUIRE(successors(c, m) == successors(c, m));
        }
    }
}

TEST_CASE("the single column maximises energy among piles of n grains")
{
    for (int n = 1; n <= 14; ++n) {
        const Energy cap = column_energy(n);
        for (const oracle::Pile& p : oracle::compositions(n)) {
            const Configuration c = to_config(p);
            if (c.is_single_column()) {
                REQUIRE(energy(c) == cap);
            } else {
                REQUIRE(energy(c) < cap);
            }
        }
    }
}

TEST_CASE("SSPM fixed points are piles with unit ends and unit steps")
{
    for (int n = 1; n <= 14; ++n) {
        for (const oracle::Pile& p : oracle::compositions(n)) {
            bool gentle = p.front() == 1 && p.back() == 1;
            for (std::size_t i = 1; i < p.size(); ++i) {
                gentle = gentle && std::abs(p[i] - p[i - 1]) <= 1;
            }
            REQUIRE(is_fixed_point(to_config(p), Model::SSPM) == gentle);
        }
    }
}
