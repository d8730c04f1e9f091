#include "borsuk/simplex.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace borsuk {
namespace {

std::vector<std::vector<double>> frame_vertices(int d) {
    if (d == 0) return {{1.0}, {-1.0}};
    const auto lower = frame_vertices(d - 1);
    const double a = 1.0 / (d + 1);
    const double scale = std::sqrt(1.0 - a * a);
    std::vector<std::vector<double>> out;
    std::vector<double> pole(static_cast<std::size_t>(d) + 1, 0.0);
    pole.back() = 1.0;
    out.push_back(std::move(pole));
    for (const auto& w : lower) {
        std::vector<double> v;
        v.reserve(static_cast<std::size_t>(d) + 1);
        for (double c : w) v.push_back(scale * c);
        v.push_back(-a);
        out.push_back(std::move(v));
    }
    return out;
}

// Unit direction of sum_j w_j v_j over the facet opposite v_0.
void project(const std::vector<std::vector<double>>& verts, std::span<const double> weights,
             std::span<double> out) {
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t j = 0; j < weights.size(); ++j)
        for (std::size_t a = 0; a < out.size(); ++a) out[a] += weights[j] * verts[j + 1][a];
    double sq = 0.0;
    for (double c : out) sq += c * c;
    const double norm = std::sqrt(sq);
    for (double& c : out) c /= norm;
}

double pair_distance(const std::vector<std::vector<double>>& verts, std::span<const double> wa,
                     std::span<const double> wb, std::vector<double>& pa, std::vector<double>& pb) {
    project(verts, wa, pa);
    project(verts, wb, pb);
    double sq = 0.0;
    for (std::size_t a = 0; a < pa.size(); ++a) sq += (pa[a] - pb[a]) * (pa[a] - pb[a]);
    return std::sqrt(sq);
}

void compositions(int parts, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == parts - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = 0; k <= total; ++k) {
        cur.push_back(k);
        compositions(parts, total - k, cur, out);
        cur.pop_back();
    }
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

FacetDiameter compute_facet_diameter(int d) {
    const auto verts = frame_vertices(d);
    const std::size_t amb = static_cast<std::size_t>(d) + 1;
    const int parts = d + 1;  // vertices of one facet
    FacetDiameter out{};
    out.vertex_chord = std::sqrt(2.0 * (d + 2) / (d + 1));

    int level = 1;
    while (binomial(level + 1 + d, d) <= 1500.0) ++level;

    std::vector<std::vector<int>> grid;
    std::vector<int> cur;
    compositions(parts, level, cur, grid);

    std::vector<std::vector<double>> weights, dirs;
    for (const auto& g : grid) {
        std::vector<double> w(g.begin(), g.end());
        for (double& x : w) x /= level;
        std::vector<double> p(amb);
        project(verts, w, p);
        weights.push_back(std::move(w));
        dirs.push_back(std::move(p));
    }

    struct Pair {
        double dist;
        std::size_t a, b;
    };
    constexpr std::size_t kKeep = 8;
    std::vector<Pair> best;
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j) {
            double sq = 0.0;
            for (std::size_t a = 0; a < amb; ++a) sq += (dirs[i][a] - dirs[j][a]) * (dirs[i][a] - dirs[j][a]);
            const double dist = std::sqrt(sq);
            if (best.size() < kKeep || dist > best.back().dist) {
                best.push_back({dist, i, j});
                std::sort(best.begin(), best.end(), [](const Pair& x, const Pair& y) { return x.dist > y.dist; });
                if (best.size() > kKeep) best.pop_back();
            }
        }

    double maximum = best.empty() ? 0.0 : best.front().dist;
    std::vector<double> pa(amb), pb(amb);
    for (const Pair& start : best) {
        std::array<std::vector<double>, 2> w{weights[start.a], weights[start.b]};
        double value = start.dist;
        for (double step = 1.0 / level; step > 1e-12;) {
            bool improved = false;
            for (auto& side : w)
                for (int from = 0; from < parts; ++from)
                    for (int to = 0; to < parts; ++to) {
                        if (from == to || side[from] <= 0.0) continue;
                        const double moved = std::min(step, side[from]);
                        side[from] -= moved;
                        side[to] += moved;
                        const double trial = pair_distance(verts, w[0], w[1], pa, pb);
                        if (trial > value + 1e-15) {
                            value = trial;
                            improved = true;
                        } else {
                            side[from] += moved;
                            side[to] -= moved;
                        }
                    }
            if (!improved) step *= 0.5;
        }
        maximum = std::max(maximum, value);
    }
    out.numeric = maximum;
    out.interior_exceeds_vertices = maximum > out.vertex_chord + 1e-6;
    return out;
}

}  // namespace

SimplexFrame simplex_vertices(int d) {
    if (d < 1) throw std::invalid_argument("simplex dimension must be >= 1");
    return simplex_frame(d);
}

SimplexFrame simplex_frame(int d) {
    if (d < 0) throw std::invalid_argument("simplex dimension must be >= 0");
    SimplexFrame frame;
    frame.dim = d;
    frame.vertices = frame_vertices(d);
    frame.lambda = lambda_diameter(d);
    return frame;
}

FacetDiameter facet_diameter(int d) {
    if (d < 1) throw std::invalid_argument("facet diameter needs d >= 1");
    static std::mutex mutex;
    static std::map<int, FacetDiameter> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, compute_facet_diameter(d)).first;
    return it->second;
}

double lambda_diameter(int d) {
    if (d < 0) throw std::invalid_argument("lambda needs d >= 0");
    return d == 0 ? 0.0 : facet_diameter(d).numeric;
}

int facet_color(std::span<const double> p, const SimplexFrame& frame) {
    if (p.size() != static_cast<std::size_t>(frame.dim) + 1)
        throw std::invalid_argument("point dimension does not match the simplex frame");
    int best = 0;
    double best_dot = 0.0;
    for (std::size_t j = 0; j < frame.vertices.size(); ++j) {
        double s = 0.0;
        for (std::size_t a = 0; a < p.size(); ++a) s += p[a] * frame.vertices[j][a];
        if (j == 0 || s < best_dot) {
            best = static_cast<int>(j);
            best_dot = s;
        }
    }
    return best;
}

}  // namespace borsuk
