#include "sandpile/count_table.hpp"

#include "sandpile/orbit_graph.hpp"
#include "sandpile/structure.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace sandpile {

bool CountRow::consistent() const noexcept
{
    return g1 + g2 == closed && (!bruteforce || *bruteforce == closed);
}

std::vector<CountRow> count_table(std::int64_t n_max, std::int64_t bfs_cutoff)
{
    if (n_max < 1) {
        throw std::invalid_argument("table needs n_max >= 1");
    }
    std::vector<CountRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max));
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const FixedPointCensus census = fixed_point_counts(n);
        CountRow row{n, census.g1, census.g2, isqrt(n), std::nullopt};
        if (n <= bfs_cutoff) {
            const OrbitGraph g = build(Configuration::column(n), Model::SSPM);
            if (g.truncated()) {
                throw std::length_error("orbit graph of (" + std::to_string(n) + ") exceeded the vertex limit");
            }
            row.bruteforce = static_cast<std::int64_t>(g.sink_ids().size());
        }
        rows.push_back(row);
    }
    return rows;
}

bool all_consistent(const std::vector<CountRow>& rows) noexcept
{
    return std::all_of(rows.begin(), rows.end(), [](const CountRow& r) { return r.consistent(); });
}

std::string format_count_csv(const std::vector<CountRow>& rows)
{
    std::ostringstream out;
    out << "n,g1,g2,G_closed,G_bruteforce\n";
    for (const CountRow& r : rows) {
        out << r.n << ',' << r.g1 << ',' << r.g2 << ',' << r.closed << ',';
        if (r.bruteforce) {
            out << *r.bruteforce;
        }
        out << '\n';
    }
    return out.str();
}

std::string format_count_ascii(const std::vector<CountRow>& rows)
{
    std::ostringstream out;
    out << std::setw(8) << "n" << std::setw(8) << "g1" << std::setw(8) << "g2" << std::setw(10) << "G_closed"
        << std::setw(14) << "G_bruteforce" << '\n';
    for (const CountRow& r : rows) {
        out << std::setw(8) << r.n << std::setw(8) << r.g1 << std::setw(8) << r.g2 << std::setw(10) << r.closed
            << std::setw(14) << (r.bruteforce ? std::to_string(*r.bruteforce) : std::string("-"));
        if (!r.consistent()) {
            out << "  MISMATCH";
        }
        out << '\n';
    }
    return out.str();
}

std::string format_count_json(const std::vector<CountRow>& rows)
{
    auto doc = nlohmann::ordered_json::array();
    for (const CountRow& r : rows) {
        nlohmann::ordered_json row;
        row["n"] = r.n;
        row["g1"] = r.g1;
        row["g2"] = r.g2;
        row["G_closed"] = r.closed;
        row["G_bruteforce"] = r.bruteforce ? nlohmann::ordered_json(*r.bruteforce) : nlohmann::ordered_json();
        doc.push_back(std::move(row));
    }
    return doc.dump() + "\n";
}

}  // namespace sandpile
