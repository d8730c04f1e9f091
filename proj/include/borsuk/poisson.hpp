#pragma once

#include <cstdint>

namespace borsuk {

/// Poisson(lambda) draw from a SplitMix64 stream: multiplication method below
/// lambda = 10, Hormann's PTRS transformed rejection above. Deterministic and
/// portable for a given seed.
std::int64_t poisson_sample(double lambda, std::uint64_t seed);

/// log P(Pois(lambda) < k), summed in log space. -inf for k <= 0.
double poisson_log_cdf_below(double lambda, std::int64_t k);

struct PoissonTail {
    double exact;  // P(Pois(2n) < n)
    double bound;  // exp(-0.306 n)
};

PoissonTail poisson_tail_check(std::int64_t n);

}  // namespace borsuk
