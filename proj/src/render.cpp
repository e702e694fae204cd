#include "sandpile/render.hpp"

#include <algorithm>

namespace sandpile {

std::vector<std::string> render_rows(const Configuration& c)
{
    const Height rows = c.max_height();
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(rows));
    for (Height level = rows; level >= 1; --level) {
        std::string row(c.size(), kEmpty);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] >= level) {
                row[i] = kGrain;
            }
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::string render_ascii(const Configuration& c)
{
    std::string out;
    for (const std::string& row : render_rows(c)) {
        out += row;
        out += '\n';
    }
    return out;
}

std::string render_side_by_side(std::span<const Configuration> shapes, std::size_t gap)
{
    if (shapes.empty()) {
        return {};
    }
    Height rows = 0;
    for (const Configuration& c : shapes) {
        rows = std::max(rows, c.max_height());
    }
    std::vector<std::string> lines(static_cast<std::size_t>(rows));
    for (std::size_t s = 0; s < shapes.size(); ++s) {
        const std::vector<std::string> block = render_rows(shapes[s]);
        const std::size_t pad = lines.size() - block.size();
        for (std::size_t r = 0; r < lines.size(); ++r) {
            if (s != 0) {
                lines[r].append(gap, ' ');
            }
            lines[r] += r < pad ? std::string(shapes[s].size(), ' ') : block[r - pad];
        }
    }
    std::string out;
    for (std::string& line : lines) {
        line.erase(line.find_last_not_of(' ') + 1);
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace sandpile
