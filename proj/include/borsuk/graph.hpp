// Simple undirected graphs in compressed adjacency form and the random
// Borsuk graph built on top of them.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "borsuk/sphere.hpp"

namespace borsuk {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple graph; neighbor lists sorted ascending.
class Graph {
public:
    Graph() = default;
    /// Duplicate and reversed edges are merged; self loops are rejected.
    static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return targets_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const noexcept {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

    /// Throws std::invalid_argument for out-of-range indices.
    bool has_edge(std::size_t u, std::size_t v) const;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
};

struct BorsukGraph {
    PointSet points;
    double eps;
    Graph graph;

    int dim() const noexcept { return points.dim(); }
    std::size_t size() const noexcept { return points.size(); }
};

/// Edge i~j iff ||X_i - X_j|| > 2 - eps. Candidates come from a hash grid
/// around each antipode -X_i; every candidate is confirmed with the exact
/// distance rule, so the result equals the all-pairs definition.
BorsukGraph build_graph(PointSet points, double eps);

bool is_edge(const BorsukGraph& g, std::size_t i, std::size_t j);

/// Length of a shortest odd cycle, or nullopt when bipartite. BFS from every
/// (v, even) state of the bipartite double cover to (v, odd).
std::optional<std::size_t> odd_girth(const Graph& g);
inline std::optional<std::size_t> odd_girth(const BorsukGraph& g) { return odd_girth(g.graph); }

/// Side assignment 0/1 for every vertex, or nullopt when an odd cycle exists.
std::optional<std::vector<int>> two_coloring(const Graph& g);

bool is_bipartite(const Graph& g);
inline bool is_bipartite(const BorsukGraph& g) { return is_bipartite(g.graph); }

}  // namespace borsuk
