#pragma once

#include "sandpile/configuration.hpp"
#include "sandpile/rules.hpp"
#include "sandpile/shape_store.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sandpile {

struct ExplorationLimits {
    std::size_t max_vertices = 5'000'000;
    /// Number of rule applications explored from the root; unset means no
    /// bound.
    std::optional<std::size_t> max_depth;
};

/// Sorted set of at most two moves, packed. Two distinct moves reach the
/// same shape only as the pair (R at the last column, L at column 0).
class MoveLabels {
public:
    static constexpr std::size_t kCapacity = 2;

    MoveLabels() = default;
    MoveLabels(std::initializer_list<Move> moves);

    /// Inserts in order; throws std::length_error past kCapacity.
    void add(const Move& mv);

    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }
    Move operator[](std::size_t i) const noexcept;
    std::vector<Move> to_vector() const;

    friend bool operator==(const MoveLabels&, const MoveLabels&) = default;

private:
    std::array<std::uint32_t, kCapacity> packed_{};
    std::uint8_t count_ = 0;
};

struct Edge {
    VertexId from = 0;
    VertexId to = 0;
    /// Every rule application on `from` that yields `to`.
    MoveLabels moves;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// The reachable part of the rewriting relation from a root shape.
///
/// Vertex 0 is the root. Vertices are numbered by first-discovery depth,
/// then lexicographically within a depth. Edges are sorted by (from, to).
/// Immutable once built.
class OrbitGraph {
public:
    /// Assembles a graph from explicit parts, e.g. for testing the
    /// verifier. Vertices must be distinct and edge endpoints in range;
    /// edges are sorted. A vertex counts as expanded unless `truncated`.
    static OrbitGraph from_parts(Model model, std::vector<Configuration> vertices, std::vector<Edge> edges,
                                 bool truncated = false);

    Model model() const noexcept { return model_; }
    Configuration root() const { return vertex(0); }
    Configuration vertex(VertexId v) const;
    std::span<const Height> heights(VertexId v) const noexcept { return store_.at(v); }
    /// Every vertex shape in id order; a copy.
    std::vector<Configuration> vertices() const;
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    bool truncated() const noexcept { return truncated_; }

    std::size_t vertex_count() const noexcept { return store_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// First-discovery depth of each vertex.
    const std::vector<std::uint32_t>& depths() const noexcept { return depths_; }

    /// Whether the successors of a vertex were computed.
    bool expanded(VertexId v) const noexcept { return expanded_[v] != 0; }

    /// Out-edges of `v` as a sub-range of edges().
    std::pair<std::size_t, std::size_t> out_edges(VertexId v) const noexcept
    {
        return {edge_offsets_[v], edge_offsets_[v + 1]};
    }
    std::size_t out_degree(VertexId v) const noexcept { return edge_offsets_[v + 1] - edge_offsets_[v]; }

    std::optional<VertexId> find(const Configuration& c) const noexcept { return store_.find(c.heights()); }

    /// Expanded vertices without out-edges, ascending by id.
    std::vector<VertexId> sink_ids() const;

private:
    friend class GraphBuilder;

    OrbitGraph() = default;
    void index_edges();

    Model model_ = Model::SSPM;
    ShapeStore store_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> edge_offsets_;
    std::vector<std::uint32_t> depths_;
    std::vector<char> expanded_;
    bool truncated_ = false;
};

/// Breadth-first exploration from `root`. Each frontier is split across
/// `workers` threads; the result does not depend on the worker count.
/// Hitting a limit sets truncated() instead of failing.
OrbitGraph build(const Configuration& root, Model m, const ExplorationLimits& lim = {}, unsigned workers = 1);

/// Shapes of the sinks, ascending by vertex id.
std::vector<Configuration> sinks(const OrbitGraph& g);

/// f^t({root}) for t = 0, 1, ... as vertex ids, each level ascending, up to
/// and excluding the first empty level. Requires a complete graph.
std::vector<std::vector<VertexId>> iterate_levels(const OrbitGraph& g);

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus s) noexcept;

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    /// Counterexample on failure, reason when skipped.
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool passed() const noexcept;
    const CheckResult* find(std::string_view name) const noexcept;
};

/// Graph-level checks: energy decrease on every edge, acyclicity, edges are
/// rule applications, and, for a complete graph rooted at a single column,
/// LR-decomposability, model membership, the top bound (SSPM) and the sink
/// census against the closed forms.
VerificationReport verify(const OrbitGraph& g);

/// True iff reachability orders the vertices as a lattice: a unique top and
/// bottom and a least upper and greatest lower bound for every pair.
bool lattice_check(const OrbitGraph& g);

struct TransientStats {
    std::size_t shortest = 0;
    std::size_t longest = 0;

    friend bool operator==(const TransientStats&, const TransientStats&) = default;
};

/// Shortest and longest path lengths from the root to a sink. Throws
/// std::logic_error on a truncated graph.
TransientStats transient_stats(const OrbitGraph& g);

enum class ExportFormat { Dot, Json };

ExportFormat parse_export_format(std::string_view text);

std::string export_graph(const OrbitGraph& g, ExportFormat format);

}  // namespace sandpile
