// Spherical caps B(x, r) = { y in S^d : ||x - y|| <= r } with chordal radius r.
#pragma once

#include <utility>

#include "borsuk/sphere.hpp"

namespace borsuk {

/// Closed cap. Points at distance exactly `radius` are inside.
struct SphericalCap {
    SpherePoint center;
    double radius;  // chordal, in (0, 2]

    SphericalCap(SpherePoint c, double r);
};

bool cap_contains(const SphericalCap& cap, std::span<const double> p);
inline bool cap_contains(const SphericalCap& cap, const SpherePoint& p) {
    return cap_contains(cap, p.coords());
}

/// Geodesic radius 2 arcsin(r/2) of a cap with chordal radius r in (0, 2].
double angular_radius(double r);

/// Euclidean radius r sqrt(1 - r^2/4) of the (d-1)-sphere bounding the cap.
double boundary_radius(double r);

/// area(S^{d-1}) / area(S^d) = Gamma((d+1)/2) / (sqrt(pi) Gamma(d/2)).
double sphere_area_ratio(int d);

/// area(B(x, r)) / area(S^d) by adaptive Simpson quadrature of
/// sin^{d-1} over [0, angular_radius(r)]; absolute error below 1e-10.
double cap_area_fraction(int d, double r);

struct AreaBounds {
    double lower;
    double upper;
};

/// The published pair ((1/pi)(sqrt3/2)^{d-1} r^d, (d/3) r^d) for 0 < r < 1,
/// returned verbatim. The lower member is NOT a valid bound for d >= 2; see
/// corrected_cap_area_lower_bound.
AreaBounds cap_area_paper_bounds(int d, double r);

/// (1/(pi d)) (sqrt3/2)^{d-1} r^d, a lower bound on cap_area_fraction that
/// does hold for every d >= 1 and 0 < r < 1.
double corrected_cap_area_lower_bound(int d, double r);

}  // namespace borsuk
