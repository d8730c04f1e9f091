#include "borsuk/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "borsuk/rng.hpp"

namespace borsuk {

std::int64_t poisson_sample(double lambda, std::uint64_t seed) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be finite and >= 0");
    if (lambda == 0.0) return 0;
    SplitMix64 rng(seed);
    if (lambda < 10.0) {
        const double limit = std::exp(-lambda);
        std::int64_t k = 0;
        double prod = rng.uniform_open0();
        while (prod > limit) {
            ++k;
            prod *= rng.uniform_open0();
        }
        return k;
    }
    const double slam = std::sqrt(lambda);
    const double loglam = std::log(lambda);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
        const double u = rng.uniform() - 0.5;
        const double v = rng.uniform_open0();
        const double us = 0.5 - std::abs(u);
        const double k = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
        if (us >= 0.07 && v <= vr) return static_cast<std::int64_t>(k);
        if (k < 0.0 || (us < 0.013 && v > us)) continue;
        if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
            -lambda + k * loglam - std::lgamma(k + 1.0))
            return static_cast<std::int64_t>(k);
    }
}

double poisson_log_cdf_below(double lambda, std::int64_t k) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be >= 0");
    if (k <= 0) return -std::numeric_limits<double>::infinity();
    if (lambda == 0.0) return 0.0;
    const double loglam = std::log(lambda);
    double peak = -std::numeric_limits<double>::infinity();
    for (std::int64_t j = 0; j < k; ++j)
        peak = std::max(peak, -lambda + j * loglam - std::lgamma(j + 1.0));
    double sum = 0.0;
    for (std::int64_t j = 0; j < k; ++j) sum += std::exp(-lambda + j * loglam - std::lgamma(j + 1.0) - peak);
    return peak + std::log(sum);
}

PoissonTail poisson_tail_check(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    return {std::exp(poisson_log_cdf_below(2.0 * static_cast<double>(n), n)), std::exp(-0.306 * static_cast<double>(n))};
}

}  // namespace borsuk
