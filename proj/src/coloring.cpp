#include "borsuk/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "borsuk/errors.hpp"
#include "borsuk/simplex.hpp"

namespace borsuk {

bool verify_coloring(const Graph& g, const Coloring& c) {
    if (c.colors.size() != g.vertex_count())
        throw std::invalid_argument("coloring covers " + std::to_string(c.colors.size()) + " vertices, graph has " +
                                    std::to_string(g.vertex_count()));
    for (std::size_t v = 0; v < c.colors.size(); ++v)
        if (c.colors[v] < 0 || c.colors[v] >= c.num_colors)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has no valid color");
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex w : g.neighbors(u))
            if (c.colors[u] == c.colors[w]) return false;
    return true;
}

Coloring greedy_coloring(const Graph& g, GreedyOrder order) {
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> visit(n);
    std::iota(visit.begin(), visit.end(), Vertex{0});
    if (order == GreedyOrder::by_degree)
        std::stable_sort(visit.begin(), visit.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    Coloring c{std::vector<int>(n, -1), 0};
    std::vector<std::size_t> seen_at;  // seen_at[color] == stamp: color taken
    std::size_t stamp = 0;
    for (Vertex v : visit) {
        ++stamp;
        for (Vertex w : g.neighbors(v))
            if (c.colors[w] >= 0) {
                if (static_cast<std::size_t>(c.colors[w]) >= seen_at.size()) seen_at.resize(c.colors[w] + 1, 0);
                seen_at[c.colors[w]] = stamp;
            }
        int color = 0;
        while (static_cast<std::size_t>(color) < seen_at.size() && seen_at[color] == stamp) ++color;
        c.colors[v] = color;
        c.num_colors = std::max(c.num_colors, color + 1);
    }
    return c;
}

Coloring simplex_coloring(const BorsukGraph& g) {
    const int d = g.dim();
    const SimplexFrame frame = simplex_vertices(d);
    if (!(g.eps < 2.0 - frame.lambda))
        throw PreconditionViolation("facet coloring is only guaranteed proper for eps < 2 - lambda_d = " +
                                    std::to_string(2.0 - frame.lambda));
    Coloring c{std::vector<int>(g.size()), d + 2};
    for (std::size_t i = 0; i < g.size(); ++i) c.colors[i] = facet_color(g.points[i], frame);
    return c;
}

double variant_lambda(int d, LambdaVariant variant) {
    return lambda_diameter(variant == LambdaVariant::d_minus_1 ? d - 1 : d);
}

double cap_removal_radius(int d, double eps, LambdaVariant variant) {
    if (d < 1) throw std::invalid_argument("sphere dimension must be >= 1");
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    const double lambda = variant_lambda(d, variant);
    return 8.0 * std::sqrt(eps) / std::sqrt(3.0 * (4.0 - lambda * lambda));
}

std::vector<double> reflect_to_north(std::span<const double> center, std::span<const double> p) {
    if (center.size() != p.size()) throw std::invalid_argument("dimension mismatch");
    std::vector<double> u(center.begin(), center.end());
    u.back() -= 1.0;
    const double uu = std::inner_product(u.begin(), u.end(), u.begin(), 0.0);
    std::vector<double> out(p.begin(), p.end());
    if (uu < 1e-30) return out;  // center already at N
    const double scale = 2.0 * std::inner_product(u.begin(), u.end(), p.begin(), 0.0) / uu;
    for (std::size_t a = 0; a < out.size(); ++a) out[a] -= scale * u[a];
    return out;
}

std::optional<std::vector<double>> boundary_projection(std::span<const double> p, double r) {
    if (p.size() < 2) throw std::invalid_argument("point must lie on S^d with d >= 1");
    if (!(r > 0.0) || r >= 1.0) throw std::invalid_argument("cap radius must lie in (0, 1)");
    const std::size_t d = p.size() - 1;
    if (std::abs(p[d]) >= 1.0 - 1e-12) return std::nullopt;
    double sq = 0.0;
    for (std::size_t a = 0; a < d; ++a) sq += p[a] * p[a];
    const double scale = boundary_radius(r) / std::sqrt(sq);
    std::vector<double> out(d);
    for (std::size_t a = 0; a < d; ++a) out[a] = scale * p[a];
    return out;
}

Coloring cap_removal_coloring(const PointSet& points, double eps, const SphericalCap& cap,
                              CapRemovalOptions options) {
    const int d = points.dim();
    if (!(eps > 0.0) || eps >= 1.0) throw std::invalid_argument("cap-removal coloring needs 0 < eps < 1");
    if (cap.center.dim() != d) throw std::invalid_argument("cap and points live on different spheres");
    if (cap.radius >= 1.0) throw PreconditionViolation("cap radius must be below 1");
    if (options.enforce_radius) {
        const double needed = cap_removal_radius(d, eps, options.variant);
        if (cap.radius < needed * (1.0 - 1e-12))
            throw PreconditionViolation("cap radius " + std::to_string(cap.radius) + " is below the required " +
                                        std::to_string(needed));
    }
    const SimplexFrame boundary_frame = simplex_frame(d - 1);
    Coloring c{std::vector<int>(points.size()), d + 1};
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (cap_contains(cap, points[i]))
            throw PreconditionViolation("point " + std::to_string(i) + " lies inside the removed cap");
        const auto q = reflect_to_north(cap.center.coords(), points[i]);
        if (q.back() <= -1.0 + 1e-12) {
            c.colors[i] = 0;  // the south pole has no neighbours outside the cap
            continue;
        }
        auto projected = boundary_projection(q, cap.radius);
        if (!projected) throw PreconditionViolation("point " + std::to_string(i) + " sits at the cap center");
        double sq = 0.0;
        for (double x : *projected) sq += x * x;
        for (double& x : *projected) x /= std::sqrt(sq);
        c.colors[i] = facet_color(*projected, boundary_frame);
    }
    return c;
}

namespace {

class DsaturSolver {
public:
    DsaturSolver(const Graph& g, std::chrono::steady_clock::time_point deadline)
        : g_(g), n_(g.vertex_count()), deadline_(deadline), colors_(n_, -1),
          forbid_(n_), saturation_(n_, 0) {}

    // Returns false on timeout.
    bool solve(int lower, int upper, std::vector<int> upper_colors) {
        best_ = upper;
        best_colors_ = std::move(upper_colors);
        lower_ = lower;
        for (auto& f : forbid_) f.assign(static_cast<std::size_t>(upper) + 1, 0);
        return branch(0, 0);
    }

    int best() const { return best_; }

private:
    bool branch(std::size_t colored, int used) {
        if (best_ <= lower_) return true;
        if ((++nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) return false;
        if (colored == n_) {
            if (used < best_) {
                best_ = used;
                best_colors_ = colors_;
            }
            return true;
        }
        const Vertex v = pick();
        const int limit = std::min(used + 1, best_ - 1);  // colors 0..limit-1 are worth trying
        for (int c = 0; c < limit; ++c) {
            if (forbid_[v][c] > 0) continue;
            assign(v, c);
            const bool ok = branch(colored + 1, std::max(used, c + 1));
            unassign(v, c);
            if (!ok) return false;
            if (best_ <= lower_) return true;
        }
        return true;
    }

    Vertex pick() const {
        Vertex best = 0;
        int best_sat = -1;
        std::size_t best_deg = 0;
        for (Vertex v = 0; v < n_; ++v) {
            if (colors_[v] >= 0) continue;
            std::size_t deg = 0;
            for (Vertex w : g_.neighbors(v)) deg += colors_[w] < 0;
            if (saturation_[v] > best_sat || (saturation_[v] == best_sat && deg > best_deg)) {
                best = v;
                best_sat = saturation_[v];
                best_deg = deg;
            }
        }
        return best;
    }

    void assign(Vertex v, int c) {
        colors_[v] = c;
        for (Vertex w : g_.neighbors(v))
            if (forbid_[w][c]++ == 0) ++saturation_[w];
    }

    void unassign(Vertex v, int c) {
        colors_[v] = -1;
        for (Vertex w : g_.neighbors(v))
            if (--forbid_[w][c] == 0) --saturation_[w];
    }

    const Graph& g_;
    std::size_t n_;
    std::chrono::steady_clock::time_point deadline_;
    std::vector<int> colors_;
    std::vector<std::vector<int>> forbid_;  // forbid_[v][c]: colored neighbours of v with color c
    std::vector<int> saturation_;
    std::vector<int> best_colors_;
    int best_ = 0;
    int lower_ = 0;
    std::uint64_t nodes_ = 0;
};

// Largest clique found by greedily extending from every start vertex.
int greedy_clique(const Graph& g) {
    const std::size_t n = g.vertex_count();
    int best = n > 0 ? 1 : 0;
    for (Vertex s = 0; s < n; ++s) {
        std::vector<Vertex> clique{s};
        std::vector<Vertex> cand(g.neighbors(s).begin(), g.neighbors(s).end());
        std::stable_sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        for (Vertex v : cand) {
            bool joins = true;
            for (Vertex u : clique)
                if (!g.has_edge(u, v)) {
                    joins = false;
                    break;
                }
            if (joins) clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

Coloring dsatur_greedy(const Graph& g) {
    const std::size_t n = g.vertex_count();
    Coloring c{std::vector<int>(n, -1), 0};
    std::vector<std::vector<char>> seen(n);
    std::vector<int> sat(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex pick = 0;
        int best_sat = -1;
        std::size_t best_deg = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (c.colors[v] >= 0) continue;
            if (sat[v] > best_sat || (sat[v] == best_sat && g.degree(v) > best_deg)) {
                pick = v;
                best_sat = sat[v];
                best_deg = g.degree(v);
            }
        }
        int color = 0;
        while (static_cast<std::size_t>(color) < seen[pick].size() && seen[pick][color]) ++color;
        c.colors[pick] = color;
        c.num_colors = std::max(c.num_colors, color + 1);
        for (Vertex w : g.neighbors(pick)) {
            if (seen[w].size() <= static_cast<std::size_t>(color)) seen[w].resize(color + 1, 0);
            if (!seen[w][color]) {
                seen[w][color] = 1;
                ++sat[w];
            }
        }
    }
    return c;
}

}  // namespace

namespace {

// Vertex lists of the connected components, each sorted ascending.
std::vector<std::vector<Vertex>> components(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<Vertex> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (Vertex w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

Graph induced(const Graph& g, const std::vector<Vertex>& vs) {
    std::vector<Vertex> local(g.vertex_count(), 0);
    for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (Vertex v : vs)
        for (Vertex w : g.neighbors(v))
            if (v < w) edges.push_back({local[v], local[w]});
    return Graph::from_edges(vs.size(), edges);
}

}  // namespace

// chi(G) is the largest chi over the connected components, so each component
// only has to be searched for a coloring with fewer colors than the running
// maximum needs.
ChromaticResult exact_chromatic(const Graph& g, std::chrono::milliseconds time_limit) {
    const auto deadline = std::chrono::steady_clock::now() + time_limit;
    ChromaticResult result;
    if (g.vertex_count() == 0) return result;

    bool timed_out = false;
    int known = 0;  // max chi over the components solved so far
    int upper_all = 0;
    for (const auto& vs : components(g)) {
        const Graph h = induced(g, vs);
        const int lower = std::max(known, greedy_clique(h));
        const Coloring upper = dsatur_greedy(h);
        if (upper.num_colors <= lower) {
            known = std::max(known, upper.num_colors);
            upper_all = std::max(upper_all, upper.num_colors);
            continue;
        }
        DsaturSolver solver(h, deadline);
        const bool finished = solver.solve(lower, upper.num_colors, upper.colors);
        upper_all = std::max(upper_all, solver.best());
        if (!finished) {
            timed_out = true;
            known = std::max(known, lower);
            continue;
        }
        known = std::max(known, solver.best());
    }
    result.upper_bound = std::max(upper_all, known);
    result.lower_bound = known;
    if (timed_out) {
        result.status = SolveStatus::timeout;
        return result;
    }
    result.value = known;
    result.upper_bound = known;
    return result;
}

}  // namespace borsuk
