// Monte Carlo trials and (n, C) sweeps over random Borsuk graphs.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "borsuk/certificate.hpp"
#include "borsuk/coloring.hpp"

namespace borsuk {

/// C (ln n / n)^{2/d}, natural log. n >= 2, C > 0.
double epsilon_schedule(int d, double C, std::int64_t n);

/// (64/3) (3 pi^2 / 4)^{1/d}: at or above this C the graph has chi = d+2 a.a.s.
double lower_bound_constant(int d);

/// 3 (4 - lambda^2)/64 (9/(4 d^2))^{1/d}: below this C the graph is
/// (d+1)-colorable a.a.s. lambda per `variant`.
double upper_bound_constant(int d, LambdaVariant variant = LambdaVariant::d_minus_1);

/// Circle constants: chi = 3 a.a.s. for C >= 9 pi^2/4, chi <= 2 for C < pi^2/4.
double circle_three_color_constant();
double circle_two_color_constant();

enum class EpsMode { fixed_eps, schedule };

struct TrialConfig {
    int dim = 1;
    std::int64_t n = 1;
    EpsMode mode = EpsMode::fixed_eps;
    double C = 0.0;          // schedule mode
    double eps_fixed = 0.0;  // fixed_eps mode
    std::uint64_t seed = 0;
    bool poissonized = false;  // draw M ~ Pois(2n) points instead of n
    LambdaVariant lambda_variant = LambdaVariant::d_minus_1;
    CoverRule certificate_rule = CoverRule::net;
    std::int64_t odd_girth_max_n = 3000;  // odd girth is skipped for larger graphs
    NetOptions net{};

    bool operator==(const TrialConfig&) const = default;
};

/// Throws std::invalid_argument for inconsistent configs.
void validate(const TrialConfig& cfg);

/// eps of the config (fixed or from the schedule).
double trial_eps(const TrialConfig& cfg);

struct TrialResult {
    TrialConfig config;
    std::int64_t n_effective = 0;
    double eps = 0.0;
    bool certificate_holds = false;
    std::size_t certificate_empty_caps = 0;
    bool empty_cap_found = false;
    std::optional<bool> coloring_d1_proper;       // set iff empty_cap_found
    std::optional<bool> simplex_coloring_proper;  // set iff eps < 2 - lambda_d
    bool odd_girth_computed = false;
    std::optional<std::size_t> odd_girth;  // nullopt & computed => bipartite
    std::optional<bool> bipartite;         // d = 1 only
    std::size_t edge_count = 0;
    double wall_ms = 0.0;

    /// Equality of everything except wall_ms.
    bool same_outcome(const TrialResult& other) const;
};

/// The trial's vertices: n points, or Pois(2n) points when poissonized. Point i
/// comes from substream i either way, so the two draws are coupled.
PointSet trial_points(const TrialConfig& cfg);

/// Samples the point set (substream per point, so Poissonized draws extend the
/// fixed-n draw), evaluates the lower-bound certificate and the empty-cap
/// search, colors and verifies, and records circle bipartiteness.
TrialResult run_trial(const TrialConfig& cfg);

/// Runs independent trials on `jobs` worker threads; results are in input
/// order and independent of `jobs`.
std::vector<TrialResult> run_trials(const std::vector<TrialConfig>& configs, unsigned jobs);

/// Seed of trial t in cell (n_index, C_index): derive_seed(master, {n_index, C_index, t}).
std::uint64_t sweep_trial_seed(std::uint64_t master, std::size_t n_index, std::size_t c_index,
                               std::size_t trial);

struct SweepCell {
    int dim = 1;
    std::int64_t n = 0;
    double C = 0.0;
    double eps = 0.0;
    std::size_t trials = 0;
    double frac_certificate = 0.0;
    double frac_empty_cap = 0.0;
    std::optional<double> frac_bipartite;  // d = 1 only
    double mean_wall_ms = 0.0;
};

struct SweepSpec {
    int dim = 1;
    std::vector<std::int64_t> n_list;
    std::vector<double> C_list;
    std::size_t trials_per_cell = 1;
    std::uint64_t seed = 0;
    TrialConfig base{};  // template for poissonized, lambda_variant, rule, ...
    unsigned jobs = 1;
};

/// One cell per (n, C), ordered n-major. Cells are keyed, not appended, so the
/// table does not depend on `jobs`.
std::vector<SweepCell> run_sweep(const SweepSpec& spec);

/// The TrialConfig run_sweep uses for one trial.
TrialConfig sweep_trial_config(const SweepSpec& spec, std::size_t n_index, std::size_t c_index,
                               std::size_t trial);

}  // namespace borsuk
