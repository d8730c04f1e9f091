#include "borsuk/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "borsuk/rng.hpp"

namespace borsuk {
namespace {

void check_dim(int d) {
    if (d < 1) throw std::invalid_argument("sphere dimension must be >= 1, got " + std::to_string(d));
}

// Rescale to unit length when the drift exceeds the tolerance; exact unit
// vectors are left bit-for-bit alone.
void normalize_in_place(std::span<double> v) {
    double sq = 0.0;
    for (double c : v) sq += c * c;
    const double norm = std::sqrt(sq);
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    if (std::abs(norm - 1.0) > kUnitNormTolerance)
        for (double& c : v) c /= norm;
}

void fill_uniform(std::span<double> out, std::uint64_t seed, std::uint64_t index) {
    SplitMix64 rng(seed, index);
    for (;;) {
        double sq = 0.0;
        for (double& c : out) {
            c = rng.normal();
            sq += c * c;
        }
        // A zero Gaussian vector has probability zero; redraw rather than divide by it.
        if (sq > 1e-300) break;
    }
    normalize_in_place(out);
}

}  // namespace

SpherePoint::SpherePoint(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw std::invalid_argument("a sphere point needs at least 2 coordinates");
    normalize_in_place(coords_);
}

SpherePoint SpherePoint::north_pole(int d) {
    check_dim(d);
    std::vector<double> c(static_cast<std::size_t>(d) + 1, 0.0);
    c.back() = 1.0;
    return SpherePoint(std::move(c), Unchecked{});
}

SpherePoint SpherePoint::operator-() const {
    std::vector<double> c(coords_);
    for (double& x : c) x = -x;
    return SpherePoint(std::move(c), Unchecked{});
}

PointSet::PointSet(int d) : dim_(d) { check_dim(d); }

PointSet::PointSet(int d, std::vector<double> flat) : dim_(d), data_(std::move(flat)) {
    check_dim(d);
    if (data_.size() % ambient() != 0)
        throw std::invalid_argument("flat coordinate buffer is not a multiple of d+1");
    for (std::size_t i = 0; i < size(); ++i)
        normalize_in_place(std::span<double>(data_.data() + i * ambient(), ambient()));
}

void PointSet::push_back(std::span<const double> p) {
    if (p.size() != ambient()) throw std::invalid_argument("point dimension mismatch");
    const std::size_t at = data_.size();
    data_.insert(data_.end(), p.begin(), p.end());
    normalize_in_place(std::span<double>(data_.data() + at, ambient()));
}

PointSet PointSet::prefix(std::size_t count) const {
    PointSet out(dim_);
    const std::size_t rows = std::min(count, size());
    out.data_.assign(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(rows * ambient()));
    return out;
}

PointSet sample_uniform(int d, std::int64_t n, std::uint64_t seed, unsigned jobs) {
    check_dim(d);
    if (n < 0) throw std::invalid_argument("point count must be non-negative");
    const std::size_t amb = static_cast<std::size_t>(d) + 1;
    std::vector<double> flat(static_cast<std::size_t>(n) * amb);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            fill_uniform(std::span<double>(flat.data() + i * amb, amb), seed, i);
    };
    const std::size_t count = static_cast<std::size_t>(n);
    jobs = std::max(1u, jobs);
    if (jobs == 1 || count < 4096) {
        work(0, count);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (count + jobs - 1) / jobs;
        for (unsigned t = 0; t < jobs; ++t) {
            const std::size_t b = std::min(count, t * chunk), e = std::min(count, b + chunk);
            pool.emplace_back(work, b, e);
        }
    }
    // Rows are already unit length; the constructor only rescales on drift.
    return PointSet(d, std::move(flat));
}

SpherePoint sample_point(int d, std::uint64_t seed, std::uint64_t index) {
    check_dim(d);
    std::vector<double> c(static_cast<std::size_t>(d) + 1);
    fill_uniform(c, seed, index);
    return SpherePoint(std::move(c));
}

double dot(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

double squared_distance(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double t = x[i] - y[i];
        s += t * t;
    }
    return s;
}

double distance(std::span<const double> x, std::span<const double> y) {
    return std::sqrt(squared_distance(x, y));
}

double antipodal_gap(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double t = x[i] + y[i];
        s += t * t;
    }
    return std::sqrt(s);
}

double adjacency_threshold(double eps) {
    if (!(eps > 0.0) || eps > 2.0)
        throw std::invalid_argument("eps must lie in (0, 2]");
    return 2.0 * std::sqrt(eps - eps * eps / 4.0);
}

}  // namespace borsuk
