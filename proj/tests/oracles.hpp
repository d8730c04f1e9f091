// Slow, direct reference implementations used to check the library.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "borsuk/graph.hpp"
#include "borsuk/sphere.hpp"

namespace oracle {

inline double norm_diff(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) s += (x[k] - y[k]) * (x[k] - y[k]);
    return std::sqrt(s);
}

// All pairs, straight from the definition.
inline std::vector<borsuk::Edge> brute_edges(const borsuk::PointSet& pts, double eps) {
    std::vector<borsuk::Edge> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (borsuk::distance(pts[i], pts[j]) > 2.0 - eps)
                out.push_back({static_cast<borsuk::Vertex>(i), static_cast<borsuk::Vertex>(j)});
    return out;
}

// Shortest odd closed walk, which has the same length as the shortest odd cycle.
// Dynamic programming over walk length; fine for a few hundred vertices.
inline std::optional<std::size_t> odd_girth_by_walks(const borsuk::Graph& g) {
    const std::size_t n = g.vertex_count();
    std::optional<std::size_t> best;
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<char> cur(n, 0), next(n);
        cur[s] = 1;
        for (std::size_t len = 1; len <= n + 1; ++len) {
            if (best && len >= *best) break;
            std::fill(next.begin(), next.end(), 0);
            for (std::size_t v = 0; v < n; ++v)
                if (cur[v])
                    for (auto w : g.neighbors(static_cast<borsuk::Vertex>(v))) next[w] = 1;
            cur.swap(next);
            if (len % 2 == 1 && cur[s]) {
                best = len;
                break;
            }
        }
    }
    return best;
}

// Chromatic number by enumerating set partitions (restricted growth strings).
inline int brute_chromatic(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    if (n == 0) return 0;
    std::vector<int> a(n, 0), mx(n, 0);
    int best = static_cast<int>(n);
    for (;;) {
        bool ok = true;
        for (auto [u, v] : edges)
            if (a[static_cast<std::size_t>(u)] == a[static_cast<std::size_t>(v)]) {
                ok = false;
                break;
            }
        if (ok) best = std::min(best, mx[n - 1] + 1);
        std::size_t i = n - 1;
        while (i > 0 && a[i] == mx[i - 1] + 1) --i;
        if (i == 0) break;
        ++a[i];
        mx[i] = std::max(mx[i - 1], a[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            a[j] = 0;
            mx[j] = mx[i];
        }
    }
    return best;
}

// Area fraction of a cap of angular radius phi on S^d from the closed forms
// of the integral of sin^{d-1}, d in {1, 2, 3}.
inline double cap_fraction_closed(int d, double phi) {
    const double pi = std::acos(-1.0);
    switch (d) {
        case 1: return phi / pi;
        case 2: return (1.0 - std::cos(phi)) / 2.0;
        case 3: return (phi - std::sin(phi) * std::cos(phi)) / pi;
        default: return std::nan("");
    }
}

}  // namespace oracle
