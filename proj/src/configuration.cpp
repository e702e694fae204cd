#include "sandpile/configuration.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sandpile {

namespace {

std::vector<Height> canonicalize(std::vector<Height> heights)
{
    auto first = std::find_if(heights.begin(), heights.end(), [](Height h) { return h != 0; });
    auto last = std::find_if(heights.rbegin(), heights.rend(), [](Height h) { return h != 0; }).base();
    if (first >= last) {
        throw std::invalid_argument("configuration has no grains");
    }
    for (auto it = first; it != last; ++it) {
        if (*it < 0) {
            throw std::invalid_argument("configuration has a negative column height");
        }
        if (*it == 0) {
            throw std::invalid_argument("configuration has an empty interior column");
        }
    }
    return {first, last};
}

std::string_view trim(std::string_view s)
{
    constexpr std::string_view ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

}  // namespace

Configuration::Configuration(std::vector<Height> heights) : heights_(canonicalize(std::move(heights))) {}

Configuration::Configuration(std::initializer_list<Height> heights)
    : Configuration(std::vector<Height>(heights))
{
}

Configuration Configuration::column(GrainCount grains)
{
    if (grains < 1) {
        throw std::invalid_argument("a column needs at least one grain");
    }
    if (grains > std::numeric_limits<Height>::max()) {
        throw std::overflow_error("column height exceeds the supported range");
    }
    return Configuration(Trusted{}, {static_cast<Height>(grains)});
}

Height Configuration::max_height() const noexcept
{
    return *std::max_element(heights_.begin(), heights_.end());
}

std::strong_ordering operator<=>(const Configuration& a, const Configuration& b) noexcept
{
    return std::lexicographical_compare_three_way(a.heights_.begin(), a.heights_.end(), b.heights_.begin(),
                                                  b.heights_.end());
}

GrainCount grains(const Configuration& c) noexcept
{
    const auto h = c.heights();
    return std::accumulate(h.begin(), h.end(), GrainCount{0});
}

std::string to_string(const Configuration& c)
{
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += std::to_string(c[i]);
    }
    return out;
}

Configuration parse_configuration(std::string_view text)
{
    std::vector<Height> heights;
    while (true) {
        const auto comma = text.find(',');
        const auto token = trim(text.substr(0, comma));
        Height value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw std::invalid_argument("malformed configuration entry '" + std::string(token) + "'");
        }
        heights.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return Configuration(std::move(heights));
}

std::size_t ConfigurationHash::operator()(const Configuration& c) const noexcept
{
    // FNV-1a over the heights.
    std::uint64_t h = 1469598103934665603ULL;
    for (Height v : c.heights()) {
        auto x = static_cast<std::uint32_t>(v);
        for (int byte = 0; byte < 4; ++byte) {
            h ^= (x >> (8 * byte)) & 0xFFU;
            h *= 1099511628211ULL;
        }
    }
    return static_cast<std::size_t>(h);
}

}  // namespace sandpile
