// Uniform hash grid over the cube [-1, 1]^D containing the sphere. A query for
// points within distance `side` of q only needs the 3^D cells around q's cell.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace borsuk {

class SpatialGrid {
public:
    /// `min_side` is the largest query radius the grid must serve. The side may
    /// be enlarged so cell coordinates fit the packed 64-bit key.
    SpatialGrid(std::size_t ambient, double min_side);

    void insert(std::uint32_t id, std::span<const double> p);

    /// Calls fn(id) for every inserted id whose cell neighbours q's cell. The
    /// caller applies the exact distance test.
    template <class Fn>
    void for_each_candidate(std::span<const double> q, Fn&& fn) const {
        const std::uint64_t base = key_of(q);
        for (std::int64_t off : offsets_) {
            auto it = cells_.find(base + static_cast<std::uint64_t>(off));
            if (it == cells_.end()) continue;
            for (std::uint32_t id : it->second) fn(id);
        }
    }

    double side() const noexcept { return side_; }

private:
    std::uint64_t key_of(std::span<const double> p) const;

    std::size_t ambient_;
    double side_;
    unsigned bits_;
    std::vector<std::int64_t> offsets_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cells_;
};

}  // namespace borsuk
