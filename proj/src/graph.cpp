#include "borsuk/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

#include "borsuk/spatial_grid.hpp"

namespace borsuk {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
    if (vertex_count > std::numeric_limits<Vertex>::max())
        throw std::invalid_argument("too many vertices");
    std::vector<std::vector<Vertex>> adj(vertex_count);
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self loops are not allowed");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    Graph g;
    g.offsets_.reserve(vertex_count + 1);
    g.offsets_.push_back(0);
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        g.targets_.insert(g.targets_.end(), list.begin(), list.end());
        g.offsets_.push_back(g.targets_.size());
    }
    return g;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    if (u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("vertex index out of range");
    const auto nb = neighbors(static_cast<Vertex>(u));
    return std::binary_search(nb.begin(), nb.end(), static_cast<Vertex>(v));
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

BorsukGraph build_graph(PointSet points, double eps) {
    if (!(eps > 0.0) || eps >= 2.0) throw std::invalid_argument("eps must lie in (0, 2)");
    const std::size_t n = points.size();
    if (n > std::numeric_limits<Vertex>::max()) throw std::invalid_argument("too many points");

    // Pad the cell side so rounding in the threshold form can never hide a
    // pair that the distance form accepts.
    const double reach = adjacency_threshold(eps) * (1.0 + 1e-9) + 1e-12;
    SpatialGrid grid(points.ambient(), reach);
    for (std::size_t i = 0; i < n; ++i) grid.insert(static_cast<Vertex>(i), points[i]);

    std::vector<Edge> edges;
    std::vector<double> antipode(points.ambient());
    for (std::size_t i = 0; i < n; ++i) {
        const auto p = points[i];
        for (std::size_t a = 0; a < antipode.size(); ++a) antipode[a] = -p[a];
        grid.for_each_candidate(antipode, [&](Vertex j) {
            if (j > i && near_antipodal(p, points[j], eps)) edges.emplace_back(static_cast<Vertex>(i), j);
        });
    }
    Graph g = Graph::from_edges(n, edges);
    return BorsukGraph{std::move(points), eps, std::move(g)};
}

bool is_edge(const BorsukGraph& g, std::size_t i, std::size_t j) { return g.graph.has_edge(i, j); }

std::optional<std::size_t> odd_girth(const Graph& g) {
    const std::size_t n = g.vertex_count();
    constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
    const auto sides = two_coloring(g);
    if (sides) return std::nullopt;

    std::size_t best = kUnseen;
    // dist[2v + parity]
    std::vector<std::size_t> dist(2 * n, kUnseen);
    std::vector<std::size_t> touched;
    std::vector<std::size_t> queue;
    for (Vertex root = 0; root < n; ++root) {
        if (g.degree(root) == 0) continue;
        for (std::size_t s : touched) dist[s] = kUnseen;
        touched.clear();
        queue.clear();
        dist[2 * root] = 0;
        touched.push_back(2 * root);
        queue.push_back(2 * root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t state = queue[head];
            const std::size_t du = dist[state];
            // Any closed walk found later is at least du + 1 long.
            if (du + 1 >= best) break;
            const Vertex u = static_cast<Vertex>(state / 2);
            const std::size_t flip = 1 - state % 2;
            for (Vertex w : g.neighbors(u)) {
                const std::size_t next = 2 * static_cast<std::size_t>(w) + flip;
                if (dist[next] != kUnseen) continue;
                dist[next] = du + 1;
                touched.push_back(next);
                if (next == 2 * static_cast<std::size_t>(root) + 1) {
                    best = std::min(best, du + 1);
                    break;
                }
                queue.push_back(next);
            }
            if (dist[2 * root + 1] != kUnseen) break;
        }
    }
    return best;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> side(n, -1);
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

}  // namespace borsuk
