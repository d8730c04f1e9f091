#include "borsuk/delta_net.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "borsuk/rng.hpp"
#include "borsuk/spatial_grid.hpp"

namespace borsuk {

NetSizeBounds net_size_bounds(int d, double delta) {
    if (d < 1) throw std::invalid_argument("sphere dimension must be >= 1");
    if (!(delta > 0.0) || delta >= 1.0) throw std::invalid_argument("size bounds need 0 < delta < 1");
    const double dd = std::pow(delta, d);
    return {3.0 / (d * dd), 2.0 * std::pow(3.0, d) * (d + 1) / dd};
}

std::size_t default_candidate_count(int d, double delta) {
    const double ambient_delta = std::min(delta, 0.999);
    const double upper = net_size_bounds(d, ambient_delta).upper;
    return static_cast<std::size_t>(std::max(1e5, std::min(50.0 * upper, 2e6)));
}

PointSet low_discrepancy_points(int d, std::size_t count) {
    if (d < 1) throw std::invalid_argument("sphere dimension must be >= 1");
    const std::size_t amb = static_cast<std::size_t>(d) + 1;
    std::vector<double> flat;
    flat.reserve(count * amb);
    if (d == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            const double t = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.5) / count;
            flat.push_back(std::cos(t));
            flat.push_back(std::sin(t));
        }
    } else if (d == 2) {
        const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
        for (std::size_t i = 0; i < count; ++i) {
            const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / count;
            const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double t = golden_angle * static_cast<double>(i);
            flat.push_back(rho * std::cos(t));
            flat.push_back(rho * std::sin(t));
            flat.push_back(z);
        }
    } else {
        // Generalized golden ratio: the unique positive root of x^{k+1} = x + 1.
        const std::size_t k = 2 * ((amb + 1) / 2);
        double phi = 2.0;
        for (int it = 0; it < 64; ++it) phi = std::pow(1.0 + phi, 1.0 / (k + 1));
        std::vector<double> alpha(k);
        for (std::size_t j = 0; j < k; ++j) alpha[j] = std::fmod(std::pow(1.0 / phi, j + 1), 1.0);
        std::vector<double> u(k), g(k);
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = 0; j < k; ++j) u[j] = std::fmod(0.5 + alpha[j] * static_cast<double>(i + 1), 1.0);
            for (std::size_t j = 0; j + 1 < k; j += 2) {
                const double radius = std::sqrt(-2.0 * std::log(std::max(u[j], 1e-300)));
                g[j] = radius * std::cos(2.0 * std::numbers::pi * u[j + 1]);
                g[j + 1] = radius * std::sin(2.0 * std::numbers::pi * u[j + 1]);
            }
            double sq = 0.0;
            for (std::size_t a = 0; a < amb; ++a) sq += g[a] * g[a];
            const double norm = std::sqrt(sq);
            for (std::size_t a = 0; a < amb; ++a) flat.push_back(norm > 0 ? g[a] / norm : (a == 0 ? 1.0 : 0.0));
        }
    }
    return PointSet(d, std::move(flat));
}

DeltaNet build_delta_net(int d, double delta, std::size_t candidate_count, std::uint64_t seed) {
    if (d < 1) throw std::invalid_argument("sphere dimension must be >= 1");
    if (!(delta > 0.0) || delta >= 2.0) throw std::invalid_argument("delta must lie in (0, 2)");
    if (candidate_count == 0) candidate_count = default_candidate_count(d, delta);

    const std::size_t lattice_count = candidate_count / 2;
    const PointSet lattice = low_discrepancy_points(d, lattice_count);
    const PointSet random = sample_uniform(d, static_cast<std::int64_t>(candidate_count - lattice_count),
                                           derive_seed(seed, {0x6e6574}));
    auto candidate = [&](std::size_t i) {
        return i < lattice_count ? lattice[i] : random[i - lattice_count];
    };

    // Fisher-Yates with our own generator so the visiting order is portable.
    std::vector<std::uint32_t> order(candidate_count);
    std::iota(order.begin(), order.end(), 0u);
    SplitMix64 rng(derive_seed(seed, {0x6f72646572}));
    for (std::size_t i = candidate_count; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

    DeltaNet net;
    net.dim = d;
    net.delta = delta;
    net.centers = PointSet(d);
    net.candidate_count = candidate_count;

    const double delta_sq = delta * delta;
    SpatialGrid grid(static_cast<std::size_t>(d) + 1, delta);
    double cover_sq = 0.0;
    for (std::uint32_t idx : order) {
        const auto p = candidate(idx);
        double nearest_sq = 4.0 + 1.0;
        grid.for_each_candidate(p, [&](std::uint32_t c) {
            nearest_sq = std::min(nearest_sq, squared_distance(p, net.centers[c]));
        });
        if (nearest_sq > delta_sq) {
            grid.insert(static_cast<std::uint32_t>(net.centers.size()), p);
            net.centers.push_back(p);
        } else {
            cover_sq = std::max(cover_sq, nearest_sq);
        }
    }
    net.candidate_cover_radius = std::sqrt(cover_sq);
    return net;
}

std::shared_ptr<const DeltaNet> cached_delta_net(int d, double delta, std::size_t candidate_count,
                                                 std::uint64_t seed) {
    using Key = std::tuple<int, double, std::size_t, std::uint64_t>;
    static std::mutex mutex;
    static std::map<Key, std::shared_future<std::shared_ptr<const DeltaNet>>> cache;

    const Key key{d, delta, candidate_count, seed};
    std::promise<std::shared_ptr<const DeltaNet>> promise;
    std::shared_future<std::shared_ptr<const DeltaNet>> future;
    bool owner = false;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(key);
        if (it == cache.end()) {
            future = promise.get_future().share();
            cache.emplace(key, future);
            owner = true;
        } else {
            future = it->second;
        }
    }
    if (owner) {
        try {
            promise.set_value(std::make_shared<const DeltaNet>(build_delta_net(d, delta, candidate_count, seed)));
        } catch (...) {
            promise.set_exception(std::current_exception());
            std::lock_guard lock(mutex);
            cache.erase(key);
        }
    }
    return future.get();
}

}  // namespace borsuk
