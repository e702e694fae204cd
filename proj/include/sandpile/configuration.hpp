#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sandpile {

using Height = std::int32_t;
using GrainCount = std::int64_t;

/// Upper bound on grain counts accepted from user input.
inline constexpr GrainCount kDefaultMaxGrains = 1'000'000;

/// A sandpile shape: the sequence of positive column heights, left to right.
///
/// Construction trims zero columns at both ends, so two piles that differ only
/// by a horizontal shift compare equal. Interior zeros and negative heights
/// are rejected, as is a pile with no grains at all.
class Configuration {
public:
    explicit Configuration(std::vector<Height> heights);
    Configuration(std::initializer_list<Height> heights);

    /// Single column holding `grains` grains.
    static Configuration column(GrainCount grains);

    std::span<const Height> heights() const noexcept { return heights_; }
    std::size_t size() const noexcept { return heights_.size(); }
    Height operator[](std::size_t i) const noexcept { return heights_[i]; }
    Height front() const noexcept { return heights_.front(); }
    Height back() const noexcept { return heights_.back(); }
    Height max_height() const noexcept;

    bool is_single_column() const noexcept { return heights_.size() == 1; }

    friend bool operator==(const Configuration&, const Configuration&) = default;
    friend std::strong_ordering operator<=>(const Configuration& a, const Configuration& b) noexcept;

private:
    struct Trusted {};
    Configuration(Trusted, std::vector<Height> heights) noexcept : heights_(std::move(heights)) {}
    friend class ConfigurationBuilder;

    std::vector<Height> heights_;
};

/// Total number of grains.
GrainCount grains(const Configuration& c) noexcept;

/// Comma-joined heights, e.g. "3,2,2,1".
std::string to_string(const Configuration& c);

/// Parses "h1,h2,...". Whitespace around entries is ignored.
Configuration parse_configuration(std::string_view text);

/// Binds the private trusted constructor for code that already guarantees
/// canonical form (all entries >= 1, non-empty).
class ConfigurationBuilder {
public:
    static Configuration from_canonical(std::vector<Height> heights) noexcept
    {
        return Configuration(Configuration::Trusted{}, std::move(heights));
    }
};

struct ConfigurationHash {
    std::size_t operator()(const Configuration& c) const noexcept;
};

}  // namespace sandpile

template <>
struct std::hash<sandpile::Configuration> : sandpile::ConfigurationHash {};
