// Points on the unit sphere S^d in R^{d+1}, uniform sampling and the chordal
// distance identities the adjacency rule is built on.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace borsuk {

inline constexpr double kUnitNormTolerance = 1e-12;

/// A unit vector in R^{d+1}, d >= 1. Construction normalizes.
class SpherePoint {
public:
    explicit SpherePoint(std::vector<double> coords);
    explicit SpherePoint(std::span<const double> coords)
        : SpherePoint(std::vector<double>(coords.begin(), coords.end())) {}

    /// (0, ..., 0, 1) in R^{d+1}.
    static SpherePoint north_pole(int d);

    int dim() const noexcept { return static_cast<int>(coords_.size()) - 1; }
    std::size_t ambient() const noexcept { return coords_.size(); }
    std::span<const double> coords() const noexcept { return coords_; }
    double operator[](std::size_t i) const noexcept { return coords_[i]; }

    SpherePoint operator-() const;

    bool operator==(const SpherePoint&) const = default;

private:
    struct Unchecked {};
    SpherePoint(std::vector<double> coords, Unchecked) : coords_(std::move(coords)) {}

    std::vector<double> coords_;
};

/// A list of points on a common S^d stored contiguously, row-major.
class PointSet {
public:
    explicit PointSet(int d);
    PointSet(int d, std::vector<double> flat);  // normalizes every row

    int dim() const noexcept { return dim_; }
    std::size_t ambient() const noexcept { return static_cast<std::size_t>(dim_) + 1; }
    std::size_t size() const noexcept { return data_.size() / ambient(); }
    bool empty() const noexcept { return data_.empty(); }

    std::span<const double> operator[](std::size_t i) const noexcept {
        return {data_.data() + i * ambient(), ambient()};
    }
    SpherePoint point(std::size_t i) const { return SpherePoint((*this)[i]); }

    void push_back(std::span<const double> p);  // normalizes
    void push_back(const SpherePoint& p) { push_back(p.coords()); }

    /// First `count` rows (all rows if count >= size()).
    PointSet prefix(std::size_t count) const;

    std::span<const double> flat() const noexcept { return data_; }

    bool operator==(const PointSet&) const = default;

private:
    int dim_;
    std::vector<double> data_;
};

/// n i.i.d. uniform points on S^d: normalized Gaussian vectors, point i drawn
/// from its own substream of `seed`, so the output does not depend on `jobs`.
PointSet sample_uniform(int d, std::int64_t n, std::uint64_t seed, unsigned jobs = 1);

/// One uniform point from substream `index` of `seed`.
SpherePoint sample_point(int d, std::uint64_t seed, std::uint64_t index);

double dot(std::span<const double> x, std::span<const double> y);
double distance(std::span<const double> x, std::span<const double> y);
double squared_distance(std::span<const double> x, std::span<const double> y);

/// ||x + y||. Satisfies ||x - y||^2 + ||x + y||^2 = 4 on the sphere.
double antipodal_gap(std::span<const double> x, std::span<const double> y);
inline double antipodal_gap(const SpherePoint& x, const SpherePoint& y) {
    return antipodal_gap(x.coords(), y.coords());
}

/// 2 sqrt(eps - eps^2/4): ||x - y|| > 2 - eps  <=>  ||x + y|| < adjacency_threshold(eps).
double adjacency_threshold(double eps);

/// The edge rule of the Borsuk graph in distance form, strict.
inline bool near_antipodal(std::span<const double> x, std::span<const double> y, double eps) {
    return distance(x, y) > 2.0 - eps;
}

}  // namespace borsuk
