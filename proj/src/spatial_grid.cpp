#include "borsuk/spatial_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace borsuk {

SpatialGrid::SpatialGrid(std::size_t ambient, double min_side) : ambient_(ambient) {
    if (ambient == 0) throw std::invalid_argument("grid needs at least one axis");
    bits_ = static_cast<unsigned>(64 / ambient);
    if (bits_ < 3) {
        // Too many axes to pack: one giant cell, i.e. brute force.
        bits_ = 0;
        side_ = 4.0;
        offsets_ = {0};
        return;
    }
    // Cells per axis: 2/side plus one pad cell on each side for the +-1 offsets.
    const double max_cells = std::ldexp(1.0, static_cast<int>(std::min(bits_, 62u))) - 4.0;
    side_ = std::max({min_side, 2.0 / max_cells, 1e-300});
    offsets_ = {0};
    for (std::size_t a = 0; a < ambient; ++a) {
        const std::int64_t unit = static_cast<std::int64_t>(std::uint64_t{1} << (a * bits_));
        std::vector<std::int64_t> next;
        next.reserve(offsets_.size() * 3);
        for (std::int64_t o : offsets_)
            for (std::int64_t s : {-1, 0, 1}) next.push_back(o + s * unit);
        offsets_ = std::move(next);
    }
}

std::uint64_t SpatialGrid::key_of(std::span<const double> p) const {
    if (bits_ == 0) return 0;
    std::uint64_t key = 0;
    for (std::size_t a = 0; a < ambient_; ++a) {
        const double clamped = std::clamp(p[a], -1.0, 1.0);
        const auto c = static_cast<std::uint64_t>(std::floor((clamped + 1.0) / side_)) + 1;
        key |= c << (a * bits_);
    }
    return key;
}

void SpatialGrid::insert(std::uint32_t id, std::span<const double> p) {
    cells_[key_of(p)].push_back(id);
}

}  // namespace borsuk
