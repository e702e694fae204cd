#include "sandpile/cli.hpp"

#include "sandpile/configuration.hpp"
#include "sandpile/count_table.hpp"
#include "sandpile/orbit_graph.hpp"
#include "sandpile/render.hpp"
#include "sandpile/rules.hpp"
#include "sandpile/structure.hpp"
#include "sandpile/trajectory.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace sandpile::cli {

namespace {

// Thrown for input the parser accepts but the command cannot use.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string model = "sspm";
    std::optional<std::int64_t> n;
    std::optional<std::string> config;
    std::uint64_t seed = 0;
    std::optional<std::string> format;
    std::size_t max_vertices = ExplorationLimits{}.max_vertices;
    std::optional<std::size_t> max_depth;
    std::int64_t bfs_cutoff = 16;
    std::optional<std::string> out_path;
    unsigned workers = 1;
    bool sweep = false;
};

struct CommandResult {
    std::string text;
    int code = kSuccess;
};

Model model_of(const RunConfig& rc)
{
    return parse_model(rc.model);
}

std::int64_t require_n(const RunConfig& rc)
{
    if (!rc.n) {
        throw UsageError("--n is required");
    }
    if (*rc.n < 1 || *rc.n > kDefaultMaxGrains) {
        throw UsageError("--n must lie in [1, " + std::to_string(kDefaultMaxGrains) + "]");
    }
    return *rc.n;
}

Configuration initial_configuration(const RunConfig& rc)
{
    if (rc.n && rc.config) {
        throw UsageError("give either --n or --config, not both");
    }
    if (rc.config) {
        try {
            return parse_configuration(*rc.config);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--config: ") + e.what());
        }
    }
    if (!rc.n) {
        throw UsageError("one of --n or --config is required");
    }
    return Configuration::column(require_n(rc));
}

std::string format_or(const RunConfig& rc, std::string fallback)
{
    return rc.format.value_or(std::move(fallback));
}

ExplorationLimits limits_of(const RunConfig& rc)
{
    if (rc.max_vertices < 1) {
        throw UsageError("--max-vertices must be positive");
    }
    return {rc.max_vertices, rc.max_depth};
}

std::vector<Height> heights_of(const Configuration& c)
{
    return {c.heights().begin(), c.heights().end()};
}

CommandResult run_evolve(const RunConfig& rc)
{
    const Model m = model_of(rc);
    const std::vector<Configuration> path = evolve(initial_configuration(rc), m, rc.seed);
    const std::string fmt = format_or(rc, "ascii");
    std::ostringstream out;
    if (fmt == "json") {
        nlohmann::ordered_json doc;
        doc["model"] = std::string(to_string(m));
        doc["seed"] = rc.seed;
        auto& steps = doc["trajectory"] = nlohmann::ordered_json::array();
        for (const Configuration& c : path) {
            steps.push_back(heights_of(c));
        }
        out << doc.dump() << '\n';
    } else if (fmt == "csv") {
        out << "step,energy,heights\n";
        for (std::size_t t = 0; t < path.size(); ++t) {
            out << t << ',' << energy(path[t]).value << ",\"" << to_string(path[t]) << "\"\n";
        }
    } else if (fmt == "ascii") {
        for (std::size_t t = 0; t < path.size(); ++t) {
            out << t << "  E=" << energy(path[t]).value << "  (" << to_string(path[t]) << ")\n";
        }
        out << '\n' << render_ascii(path.back());
    } else {
        throw UsageError("evolve does not support format '" + fmt + "'");
    }
    return {out.str(), kSuccess};
}

CommandResult run_graph(const RunConfig& rc)
{
    const Model m = model_of(rc);
    const std::string fmt = format_or(rc, "dot");
    if (fmt == "csv") {
        throw UsageError("graph does not support format 'csv'");
    }
    const OrbitGraph g = build(initial_configuration(rc), m, limits_of(rc), rc.workers);
    std::string text;
    if (fmt == "ascii") {
        std::ostringstream out;
        out << "model     " << to_string(m) << '\n'
            << "root      (" << to_string(g.root()) << ")\n"
            << "vertices  " << g.vertex_count() << '\n'
            << "edges     " << g.edge_count() << '\n'
            << "truncated " << (g.truncated() ? "yes" : "no") << '\n';
        const auto tips = sinks(g);
        out << "sinks     " << tips.size() << '\n';
        for (const Configuration& c : tips) {
            out << "          (" << to_string(c) << ")\n";
        }
        if (!g.truncated()) {
            const TransientStats ts = transient_stats(g);
            out << "transient " << ts.shortest << ".." << ts.longest << '\n';
        }
        text = out.str();
    } else {
        text = export_graph(g, parse_export_format(fmt));
    }
    return {text, g.truncated() ? kResourceLimit : kSuccess};
}

CommandResult run_fixpoints(const RunConfig& rc)
{
    const Model m = model_of(rc);
    const std::int64_t n = require_n(rc);
    const std::vector<Configuration> shapes =
        m == Model::SSPM ? enumerate_fixed_points(n) : std::vector<Configuration>{spm_fixed_point(n)};
    const std::string fmt = format_or(rc, "ascii");
    std::ostringstream out;
    if (fmt == "ascii") {
        out << "n = " << n << ": " << shapes.size() << " fixed point" << (shapes.size() == 1 ? "" : "s") << '\n'
            << '\n'
            << render_side_by_side(shapes) << '\n';
        for (const Configuration& c : shapes) {
            out << "(" << to_string(c) << ")\n";
        }
    } else if (fmt == "csv") {
        out << "n,index,heights\n";
        for (std::size_t i = 0; i < shapes.size(); ++i) {
            out << n << ',' << i << ",\"" << to_string(shapes[i]) << "\"\n";
        }
    } else if (fmt == "json") {
        nlohmann::ordered_json doc;
        doc["model"] = std::string(to_string(m));
        doc["n"] = n;
        doc["count"] = shapes.size();
        auto& list = doc["shapes"] = nlohmann::ordered_json::array();
        for (const Configuration& c : shapes) {
            list.push_back(heights_of(c));
        }
        out << doc.dump() << '\n';
    } else {
        throw UsageError("fixpoints does not support format '" + fmt + "'");
    }
    return {out.str(), kSuccess};
}

CommandResult run_count(const RunConfig& rc)
{
    const std::int64_t n_max = require_n(rc);
    const std::vector<CountRow> rows = count_table(n_max, rc.bfs_cutoff);
    const std::string fmt = format_or(rc, "ascii");
    std::string text;
    if (fmt == "ascii") {
        text = format_count_ascii(rows);
    } else if (fmt == "csv") {
        text = format_count_csv(rows);
    } else if (fmt == "json") {
        text = format_count_json(rows);
    } else {
        throw UsageError("count does not support format '" + fmt + "'");
    }
    return {text, all_consistent(rows) ? kSuccess : kMismatch};
}

void report_graph(std::ostringstream& out, const OrbitGraph& g, int& code)
{
    out << "og(" << to_string(g.root()) << ") " << to_string(g.model()) << ": " << g.vertex_count()
        << " vertices, " << g.edge_count() << " edges" << (g.truncated() ? " (truncated)" : "") << '\n';
    const VerificationReport report = verify(g);
    for (const CheckResult& c : report.checks) {
        out << "  " << to_string(c.status) << "  " << c.name;
        if (!c.detail.empty()) {
            out << "  " << c.detail;
        }
        out << '\n';
    }
    if (!report.passed()) {
        code = std::max(code, static_cast<int>(kMismatch));
    }
    if (g.truncated()) {
        code = kResourceLimit;
        return;
    }
    if (g.model() == Model::SPM) {
        const bool lattice = lattice_check(g);
        out << "  " << (lattice ? "pass" : "FAIL") << "  lattice\n";
        if (!lattice && code == kSuccess) {
            code = kMismatch;
        }
    }
}

CommandResult run_verify(const RunConfig& rc)
{
    const Model m = model_of(rc);
    const ExplorationLimits lim = limits_of(rc);
    std::ostringstream out;
    int code = kSuccess;
    if (rc.sweep) {
        const std::int64_t n_max = require_n(rc);
        for (std::int64_t n = 1; n <= n_max; ++n) {
            report_graph(out, build(Configuration::column(n), m, lim, rc.workers), code);
        }
    } else {
        report_graph(out, build(initial_configuration(rc), m, lim, rc.workers), code);
    }
    return {out.str(), code};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Sandpile rewriting systems: trajectories, orbit graphs and fixed points", "sandpile"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig rc;
    app.add_option("--model", rc.model, "spm or sspm")->check(CLI::IsMember({"spm", "sspm", "SPM", "SSPM"}));
    app.add_option("--n", rc.n, "Grain count of the single-column root (or n_max for count)");
    app.add_option("--config", rc.config, "Explicit initial pile h1,h2,...");
    app.add_option("--seed", rc.seed, "Seed for the random schedule of evolve");
    app.add_option("--format", rc.format, "ascii, dot, json or csv")
        ->check(CLI::IsMember({"ascii", "dot", "json", "csv"}));
    app.add_option("--max-vertices", rc.max_vertices, "Vertex budget for orbit graph exploration");
    app.add_option("--max-depth", rc.max_depth, "Depth budget for orbit graph exploration");
    app.add_option("--bfs-cutoff", rc.bfs_cutoff, "Largest n counted exhaustively by count");
    app.add_option("--out", rc.out_path, "Write output to this file instead of standard output");
    app.add_option("--workers", rc.workers, "Threads expanding each orbit graph frontier");
    app.add_flag("--sweep", rc.sweep, "verify every single column 1..n");

    auto* evolve_cmd = app.add_subcommand("evolve", "Follow one random trajectory to a fixed point");
    auto* graph_cmd = app.add_subcommand("graph", "Build and export an orbit graph");
    auto* fix_cmd = app.add_subcommand("fixpoints", "Draw the fixed points reached from (n)");
    auto* count_cmd = app.add_subcommand("count", "Tabulate fixed point counts for 1..n");
    auto* verify_cmd = app.add_subcommand("verify", "Check structural properties of orbit graphs");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "sandpile: " << e.what() << '\n' << "run 'sandpile --help' for usage\n";
        return kUsage;
    }

    CommandResult result;
    try {
        if (evolve_cmd->parsed()) {
            result = run_evolve(rc);
        } else if (graph_cmd->parsed()) {
            result = run_graph(rc);
        } else if (fix_cmd->parsed()) {
            result = run_fixpoints(rc);
        } else if (count_cmd->parsed()) {
            result = run_count(rc);
        } else if (verify_cmd->parsed()) {
            result = run_verify(rc);
        }
    } catch (const UsageError& e) {
        err << "sandpile: " << e.what() << '\n';
        return kUsage;
    } catch (const std::length_error& e) {
        err << "sandpile: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const std::invalid_argument& e) {
        err << "sandpile: " << e.what() << '\n';
        return kUsage;
    }

    if (rc.out_path) {
        std::ofstream file(*rc.out_path, std::ios::binary);
        if (!file) {
            err << "sandpile: cannot open '" << *rc.out_path << "' for writing\n";
            return kUsage;
        }
        file << result.text;
    } else {
        out << result.text;
    }
    if (result.code == kResourceLimit) {
        err << "sandpile: exploration limit reached, graph is truncated\n";
    }
    return result.code;
}

}  // namespace sandpile::cli
