#include "sandpile/rules.hpp"

#include <algorithm>

namespace sandpile {

namespace {

std::int64_t triangular_checked(std::int64_t h)
{
    std::int64_t product = 0;
    // One of h, h+1 is even; halve it first to delay overflow.
    const std::int64_t a = (h % 2 == 0) ? h / 2 : h;
    const std::int64_t b = (h % 2 == 0) ? h + 1 : (h + 1) / 2;
    if (__builtin_mul_overflow(a, b, &product)) {
        throw std::overflow_error("energy does not fit in 64 bits");
    }
    return product;
}

bool is_enabled(const Configuration& c, const Move& mv)
{
    return mv.index < c.size() && slope(c, mv.index, mv.direction) >= 2;
}

}  // namespace

std::string_view to_string(Model m) noexcept
{
    return m == Model::SPM ? "SPM" : "SSPM";
}

Model parse_model(std::string_view text)
{
    if (text == "spm" || text == "SPM") {
        return Model::SPM;
    }
    if (text == "sspm" || text == "SSPM") {
        return Model::SSPM;
    }
    throw std::invalid_argument("unknown model '" + std::string(text) + "'");
}

std::string to_string(const Move& mv)
{
    return std::string(mv.direction == Direction::Right ? "R" : "L") + std::to_string(mv.index);
}

std::int64_t slope(const Configuration& c, std::size_t i, Direction dir)
{
    const std::size_t k = c.size();
    if (i >= k) {
        throw std::out_of_range("column index " + std::to_string(i) + " outside a pile of " + std::to_string(k) +
                                " columns");
    }
    const std::int64_t here = c[i];
    if (dir == Direction::Right) {
        return here - (i + 1 < k ? c[i + 1] : 0);
    }
    return here - (i > 0 ? c[i - 1] : 0);
}

void enabled_moves_into(std::span<const Height> h, Model m, std::vector<Move>& out)
{
    out.clear();
    const std::size_t k = h.size();
    for (std::size_t i = 0; i < k; ++i) {
        if (h[i] - (i + 1 < k ? h[i + 1] : 0) >= 2) {
            out.push_back({Direction::Right, i});
        }
    }
    if (m == Model::SSPM) {
        for (std::size_t i = 0; i < k; ++i) {
            if (h[i] - (i > 0 ? h[i - 1] : 0) >= 2) {
                out.push_back({Direction::Left, i});
            }
        }
    }
}

std::vector<Move> enabled_moves(const Configuration& c, Model m)
{
    std::vector<Move> moves;
    enabled_moves_into(c.heights(), m, moves);
    return moves;
}

void apply_move_into(std::span<const Height> src, const Move& mv, std::vector<Height>& out)
{
    // An enabled move never empties its source column (slope >= 2 means
    // height >= 2), so the result is already canonical.
    const std::size_t i = mv.index;
    out.clear();
    if (mv.direction == Direction::Right) {
        out.assign(src.begin(), src.end());
        out[i] -= 1;
        if (i + 1 < out.size()) {
            out[i + 1] += 1;
        } else {
            out.push_back(1);
        }
    } else if (i == 0) {
        out.push_back(1);
        out.insert(out.end(), src.begin(), src.end());
        out[1] -= 1;
    } else {
        out.assign(src.begin(), src.end());
        out[i] -= 1;
        out[i - 1] += 1;
    }
}

Configuration apply_move(const Configuration& c, const Move& mv)
{
    if (!is_enabled(c, mv)) {
        throw RuleViolation("move " + to_string(mv) + " is not enabled on (" + to_string(c) + ")");
    }
    std::vector<Height> out;
    out.reserve(c.size() + 1);
    apply_move_into(c.heights(), mv, out);
    return ConfigurationBuilder::from_canonical(std::move(out));
}

Configuration apply_move(const Configuration& c, const Move& mv, Model m)
{
    if (m == Model::SPM && mv.direction == Direction::Left) {
        throw RuleViolation("leftward move " + to_string(mv) + " is never enabled under SPM");
    }
    return apply_move(c, mv);
}

std::vector<Configuration> successors(const Configuration& c, Model m)
{
    std::vector<Configuration> out;
    for (const Move& mv : enabled_moves(c, m)) {
        out.push_back(apply_move(c, mv));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ConfigurationSet frontier_step(const ConfigurationSet& s, Model m)
{
    ConfigurationSet next;
    for (const Configuration& c : s) {
        for (Configuration& d : successors(c, m)) {
            next.insert(std::move(d));
        }
    }
    return next;
}

Energy energy(const Configuration& c)
{
    std::int64_t total = 0;
    for (Height h : c.heights()) {
        if (__builtin_add_overflow(total, triangular_checked(h), &total)) {
            throw std::overflow_error("energy does not fit in 64 bits");
        }
    }
    return {total};
}

Energy column_energy(GrainCount n)
{
    if (n < 0) {
        throw std::invalid_argument("negative grain count");
    }
    return {triangular_checked(n)};
}

bool is_fixed_point(const Configuration& c, Model m)
{
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (slope(c, i, Direction::Right) >= 2) {
            return false;
        }
        if (m == Model::SSPM && slope(c, i, Direction::Left) >= 2) {
            return false;
        }
    }
    return true;
}

}  // namespace sandpile
