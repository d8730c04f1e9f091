#include "borsuk/caps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace borsuk {
namespace {

void check_radius(double r) {
    if (!(r > 0.0) || r > 2.0) throw std::invalid_argument("cap radius must lie in (0, 2]");
}

void check_dim(int d) {
    if (d < 1) throw std::invalid_argument("sphere dimension must be >= 1");
}

template <class F>
double simpson_step(const F& f, double a, double b, double fa, double fm, double fb, double whole,
                    double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

SphericalCap::SphericalCap(SpherePoint c, double r) : center(std::move(c)), radius(r) {
    check_radius(r);
}

bool cap_contains(const SphericalCap& cap, std::span<const double> p) {
    return distance(cap.center.coords(), p) <= cap.radius;
}

double angular_radius(double r) {
    check_radius(r);
    return 2.0 * std::asin(r / 2.0);
}

double boundary_radius(double r) {
    check_radius(r);
    return r * std::sqrt(1.0 - r * r / 4.0);
}

double sphere_area_ratio(int d) {
    check_dim(d);
    return std::exp(std::lgamma((d + 1) / 2.0) - std::lgamma(d / 2.0)) / std::sqrt(std::numbers::pi);
}

double cap_area_fraction(int d, double r) {
    check_dim(d);
    const double phi = angular_radius(r);
    const double ratio = sphere_area_ratio(d);
    if (d == 1) return ratio * phi;
    const int power = d - 1;
    auto integrand = [power](double t) { return std::pow(std::sin(t), power); };
    // ratio <= d/pi, so this keeps the fraction's error under 1e-10.
    const double integral = adaptive_simpson(integrand, 0.0, phi, 1e-12 / d);
    return std::min(1.0, ratio * integral);
}

AreaBounds cap_area_paper_bounds(int d, double r) {
    check_dim(d);
    if (!(r > 0.0) || r >= 1.0) throw std::invalid_argument("area bounds apply only for 0 < r < 1");
    const double rd = std::pow(r, d);
    return {std::pow(std::sqrt(3.0) / 2.0, d - 1) * rd / std::numbers::pi, d / 3.0 * rd};
}

double corrected_cap_area_lower_bound(int d, double r) {
    return cap_area_paper_bounds(d, r).lower / d;
}

}  // namespace borsuk
