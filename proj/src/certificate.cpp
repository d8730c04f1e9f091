#include "borsuk/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "borsuk/spatial_grid.hpp"

namespace borsuk {
namespace {

// Occupancy of B(center, radius) for every net center, in net order.
template <class Fn>
void scan_caps(const PointSet& points, const DeltaNet& net, double radius, Fn&& on_cap) {
    SpatialGrid grid(points.ambient(), radius);
    for (std::size_t i = 0; i < points.size(); ++i) grid.insert(static_cast<std::uint32_t>(i), points[i]);
    const double radius_sq = radius * radius;
    for (std::size_t c = 0; c < net.size(); ++c) {
        const auto y = net.centers[c];
        bool occupied = false;
        grid.for_each_candidate(y, [&](std::uint32_t id) {
            if (!occupied && squared_distance(y, points[id]) <= radius_sq)
                occupied = distance(y, points[id]) <= radius;
        });
        if (!on_cap(c, occupied)) return;
    }
}

Certificate arc_gap_certificate(const PointSet& points, double eps) {
    Certificate cert;
    cert.kind = CertificateKind::lower_bound_lsb;
    cert.rule = CoverRule::arc_gap;
    std::vector<double> angles;
    angles.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) angles.push_back(std::atan2(points[i][1], points[i][0]));
    std::sort(angles.begin(), angles.end());
    double gap = 2.0 * std::numbers::pi;
    if (!angles.empty()) {
        gap = angles.front() + 2.0 * std::numbers::pi - angles.back();
        for (std::size_t i = 1; i < angles.size(); ++i) gap = std::max(gap, angles[i] - angles[i - 1]);
    }
    const double rho = 2.0 * std::sin(gap / 4.0);
    cert.delta = rho;
    cert.cap_radius = rho;
    cert.holds = !angles.empty() && rho < std::sqrt(eps - eps * eps / 4.0);
    return cert;
}

}  // namespace

Certificate lsb_certificate(const PointSet& points, double eps, CoverRule rule, NetOptions net_options) {
    if (!(eps > 0.0) || eps >= 2.0) throw std::invalid_argument("eps must lie in (0, 2)");
    if (rule == CoverRule::arc_gap) {
        if (points.dim() != 1) throw std::invalid_argument("the arc-gap rule only applies on the circle");
        return arc_gap_certificate(points, eps);
    }
    Certificate cert;
    cert.kind = CertificateKind::lower_bound_lsb;
    cert.rule = CoverRule::net;
    cert.delta = std::sqrt(eps) / 4.0;
    cert.cap_radius = cert.delta;
    cert.net = cached_delta_net(points.dim(), cert.delta, net_options.candidate_count, net_options.net_seed);
    if (points.empty()) {
        cert.empty_caps = cert.net->size();
        return cert;
    }
    scan_caps(points, *cert.net, cert.cap_radius, [&](std::size_t, bool occupied) {
        cert.empty_caps += !occupied;
        return true;
    });
    cert.holds = cert.empty_caps == 0 && cert.net->size() > 0;
    return cert;
}

Certificate empty_cap_certificate(const PointSet& points, double eps, LambdaVariant variant,
                                  NetOptions net_options) {
    if (!(eps > 0.0) || eps >= 1.0) throw std::invalid_argument("empty-cap search needs 0 < eps < 1");
    Certificate cert;
    cert.kind = CertificateKind::upper_bound_empty_cap;
    cert.cap_radius = cap_removal_radius(points.dim(), eps, variant);
    cert.delta = 2.0 * cert.cap_radius;
    if (cert.cap_radius >= 1.0) return cert;
    cert.net = cached_delta_net(points.dim(), cert.delta, net_options.candidate_count, net_options.net_seed);
    scan_caps(points, *cert.net, cert.cap_radius, [&](std::size_t c, bool occupied) {
        if (occupied) return true;
        ++cert.empty_caps;
        cert.witness.emplace(cert.net->centers.point(c), cert.cap_radius);
        return false;
    });
    cert.holds = cert.witness.has_value();
    return cert;
}

std::optional<SphericalCap> find_empty_cap(const PointSet& points, double eps, LambdaVariant variant,
                                           NetOptions net_options) {
    return empty_cap_certificate(points, eps, variant, net_options).witness;
}

}  // namespace borsuk
