// Maximal delta-separated point sets on S^d, built greedily over a dense
// candidate cloud (half uniform random, half a low-discrepancy layout).
#pragma once

#include <cstdint>
#include <memory>

#include "borsuk/sphere.hpp"

namespace borsuk {

struct DeltaNet {
    int dim = 1;
    double delta = 0.0;
    PointSet centers{1};
    std::size_t candidate_count = 0;
    /// Largest distance from a candidate to its nearest center (<= delta).
    double candidate_cover_radius = 0.0;

    std::size_t size() const noexcept { return centers.size(); }
};

/// Cardinality window 3/(d delta^d) <= N <= 2 3^d (d+1) / delta^d, 0 < delta < 1.
struct NetSizeBounds {
    double lower;
    double upper;
};
NetSizeBounds net_size_bounds(int d, double delta);

/// max(1e5, min(50 * upper size bound, 2e6)).
std::size_t default_candidate_count(int d, double delta);

/// Greedy maximal separation: candidates are visited in a seeded random order
/// and kept when farther than delta from every kept center. Accepts
/// 0 < delta < 2; the cardinality window is only meaningful below 1.
/// candidate_count == 0 selects default_candidate_count.
DeltaNet build_delta_net(int d, double delta, std::size_t candidate_count, std::uint64_t seed);

/// Memoized build_delta_net; safe to call from several threads.
std::shared_ptr<const DeltaNet> cached_delta_net(int d, double delta, std::size_t candidate_count,
                                                 std::uint64_t seed);

/// Deterministic quasi-uniform points: equally spaced angles (d = 1), a
/// Fibonacci spiral (d = 2), a Kronecker sequence pushed through Box-Muller
/// and normalized (d >= 3).
PointSet low_discrepancy_points(int d, std::size_t count);

}  // namespace borsuk
