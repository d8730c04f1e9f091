// Occupancy certificates over delta-nets.
//
// lower_bound_lsb: every point of S^d lies within rho of some vertex with
// rho < sqrt(eps - eps^2/4). Any proper (d+1)-coloring would then give a closed
// cover of S^d by d+1 sets without an antipodal pair, which the
// Lyusternik-Schnirelman-Borsuk theorem forbids, so chi >= d+2.
//
// upper_bound_empty_cap: a cap of radius cap_removal_radius holds no vertex, so
// cap_removal_coloring yields a proper (d+1)-coloring.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "borsuk/caps.hpp"
#include "borsuk/coloring.hpp"
#include "borsuk/delta_net.hpp"

namespace borsuk {

inline constexpr std::uint64_t kDefaultNetSeed = 0x6e65742d73656564ULL;

enum class CertificateKind { lower_bound_lsb, upper_bound_empty_cap };

/// How the lower-bound certificate establishes the covering radius rho.
enum class CoverRule {
    /// Net of spacing sqrt(eps)/4, caps B(y_i, sqrt(eps)/4) must all be occupied;
    /// then rho <= sqrt(eps)/2. Works for every d.
    net,
    /// d = 1 only: rho is computed exactly from the largest angular gap between
    /// consecutive vertices on the circle. No net involved.
    arc_gap,
};

struct Certificate {
    CertificateKind kind = CertificateKind::lower_bound_lsb;
    CoverRule rule = CoverRule::net;
    double delta = 0.0;       // net spacing (net rule), covering radius (arc_gap rule)
    double cap_radius = 0.0;  // radius of the scanned caps F_i
    std::shared_ptr<const DeltaNet> net;  // null for the arc_gap rule
    std::size_t empty_caps = 0;           // caps F_i without a vertex
    std::optional<SphericalCap> witness;  // empty cap (upper_bound_empty_cap)
    bool holds = false;

    std::size_t net_size() const noexcept { return net ? net->size() : 0; }
};

struct NetOptions {
    std::size_t candidate_count = 0;  // 0 selects default_candidate_count
    std::uint64_t net_seed = kDefaultNetSeed;

    bool operator==(const NetOptions&) const = default;
};

/// Requires 0 < eps < 2 (chi = d+2 additionally needs eps < 2 - lambda_d).
/// An empty point set never certifies.
Certificate lsb_certificate(const PointSet& points, double eps, CoverRule rule = CoverRule::net,
                            NetOptions net_options = {});

/// Net spacing 2 cap_removal_radius(d, eps) and caps F_i = B(y_i, spacing/2);
/// returns the first vertex-free F_i. nullopt when none is empty or when the
/// required radius reaches 1.
std::optional<SphericalCap> find_empty_cap(const PointSet& points, double eps,
                                           LambdaVariant variant = LambdaVariant::d_minus_1,
                                           NetOptions net_options = {});

/// find_empty_cap packaged as an upper_bound_empty_cap certificate.
Certificate empty_cap_certificate(const PointSet& points, double eps,
                                  LambdaVariant variant = LambdaVariant::d_minus_1, NetOptions net_options = {});

}  // namespace borsuk
