#include "borsuk/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "borsuk/poisson.hpp"
#include "borsuk/rng.hpp"
#include "borsuk/simplex.hpp"

namespace borsuk {

double epsilon_schedule(int d, double C, std::int64_t n) {
    if (d < 1) throw std::invalid_argument("sphere dimension must be >= 1");
    if (n < 2) throw std::invalid_argument("the eps schedule needs n >= 2");
    if (!(C > 0.0)) throw std::invalid_argument("schedule constant C must be positive");
    const double x = std::log(static_cast<double>(n)) / static_cast<double>(n);
    return C * std::pow(x, 2.0 / d);
}

double lower_bound_constant(int d) {
    if (d < 1) throw std::invalid_argument("sphere dimension must be >= 1");
    return 64.0 / 3.0 * std::pow(3.0 * std::numbers::pi * std::numbers::pi / 4.0, 1.0 / d);
}

double upper_bound_constant(int d, LambdaVariant variant) {
    if (d < 1) throw std::invalid_argument("sphere dimension must be >= 1");
    const double lambda = variant_lambda(d, variant);
    return 3.0 * (4.0 - lambda * lambda) / 64.0 * std::pow(9.0 / (4.0 * d * d), 1.0 / d);
}

double circle_three_color_constant() { return 9.0 * std::numbers::pi * std::numbers::pi / 4.0; }
double circle_two_color_constant() { return std::numbers::pi * std::numbers::pi / 4.0; }

void validate(const TrialConfig& cfg) {
    if (cfg.dim < 1) throw std::invalid_argument("sphere dimension must be >= 1");
    if (cfg.n < 1) throw std::invalid_argument("n must be >= 1");
    if (cfg.mode == EpsMode::schedule) {
        if (!(cfg.C > 0.0)) throw std::invalid_argument("schedule mode needs C > 0");
        if (cfg.n < 2) throw std::invalid_argument("schedule mode needs n >= 2");
    } else if (!(cfg.eps_fixed > 0.0) || cfg.eps_fixed >= 2.0) {
        throw std::invalid_argument("fixed eps must lie in (0, 2)");
    }
    if (cfg.certificate_rule == CoverRule::arc_gap && cfg.dim != 1)
        throw std::invalid_argument("the arc-gap certificate only applies for d = 1");
}

double trial_eps(const TrialConfig& cfg) {
    return cfg.mode == EpsMode::schedule ? epsilon_schedule(cfg.dim, cfg.C, cfg.n) : cfg.eps_fixed;
}

bool TrialResult::same_outcome(const TrialResult& o) const {
    return config == o.config && n_effective == o.n_effective && eps == o.eps &&
           certificate_holds == o.certificate_holds && certificate_empty_caps == o.certificate_empty_caps &&
           empty_cap_found == o.empty_cap_found && coloring_d1_proper == o.coloring_d1_proper &&
           simplex_coloring_proper == o.simplex_coloring_proper && odd_girth_computed == o.odd_girth_computed &&
           odd_girth == o.odd_girth && bipartite == o.bipartite && edge_count == o.edge_count;
}

PointSet trial_points(const TrialConfig& cfg) {
    const std::int64_t count =
        cfg.poissonized ? poisson_sample(2.0 * static_cast<double>(cfg.n), derive_seed(cfg.seed, {2})) : cfg.n;
    return sample_uniform(cfg.dim, count, derive_seed(cfg.seed, {1}));
}

TrialResult run_trial(const TrialConfig& cfg) {
    validate(cfg);
    const auto start = std::chrono::steady_clock::now();
    TrialResult r;
    r.config = cfg;
    r.eps = trial_eps(cfg);
    if (!(r.eps < 2.0)) throw std::invalid_argument("the schedule produced eps >= 2; increase n or lower C");

    PointSet points = trial_points(cfg);
    r.n_effective = static_cast<std::int64_t>(points.size());

    const Certificate lsb = lsb_certificate(points, r.eps, cfg.certificate_rule, cfg.net);
    r.certificate_holds = lsb.holds;
    r.certificate_empty_caps = lsb.empty_caps;

    std::optional<SphericalCap> cap;
    if (r.eps < 1.0) cap = find_empty_cap(points, r.eps, cfg.lambda_variant, cfg.net);
    r.empty_cap_found = cap.has_value();

    const bool simplex_applies = r.eps < 2.0 - lambda_diameter(cfg.dim);
    const bool girth_applies = r.n_effective <= cfg.odd_girth_max_n;
    if (!(cap || cfg.dim == 1 || simplex_applies || girth_applies)) {
        r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return r;
    }

    const BorsukGraph g = build_graph(std::move(points), r.eps);
    r.edge_count = g.graph.edge_count();
    if (cap) {
        CapRemovalOptions opts{cfg.lambda_variant, cfg.lambda_variant == LambdaVariant::d_minus_1};
        r.coloring_d1_proper = verify_coloring(g, cap_removal_coloring(g.points, r.eps, *cap, opts));
    }
    if (simplex_applies) r.simplex_coloring_proper = verify_coloring(g, simplex_coloring(g));
    if (cfg.dim == 1) r.bipartite = is_bipartite(g);
    if (girth_applies) {
        r.odd_girth_computed = true;
        r.odd_girth = odd_girth(g);
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<TrialResult> run_trials(const std::vector<TrialConfig>& configs, unsigned jobs) {
    std::vector<TrialResult> results(configs.size());
    std::vector<std::exception_ptr> errors(configs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < configs.size(); i = next++) {
            try {
                results[i] = run_trial(configs[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, configs.size()))));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

std::uint64_t sweep_trial_seed(std::uint64_t master, std::size_t n_index, std::size_t c_index, std::size_t trial) {
    return derive_seed(master, {n_index, c_index, trial});
}

TrialConfig sweep_trial_config(const SweepSpec& spec, std::size_t n_index, std::size_t c_index, std::size_t trial) {
    TrialConfig cfg = spec.base;
    cfg.dim = spec.dim;
    cfg.n = spec.n_list.at(n_index);
    cfg.mode = EpsMode::schedule;
    cfg.C = spec.C_list.at(c_index);
    cfg.seed = sweep_trial_seed(spec.seed, n_index, c_index, trial);
    return cfg;
}

std::vector<SweepCell> run_sweep(const SweepSpec& spec) {
    if (spec.n_list.empty() || spec.C_list.empty()) throw std::invalid_argument("sweep lists must be non-empty");
    if (spec.trials_per_cell < 1) throw std::invalid_argument("trials per cell must be >= 1");
    std::vector<TrialConfig> configs;
    for (std::size_t ni = 0; ni < spec.n_list.size(); ++ni)
        for (std::size_t ci = 0; ci < spec.C_list.size(); ++ci)
            for (std::size_t t = 0; t < spec.trials_per_cell; ++t) configs.push_back(sweep_trial_config(spec, ni, ci, t));
    for (const auto& c : configs) validate(c);
    const auto results = run_trials(configs, spec.jobs);

    std::vector<SweepCell> cells;
    std::size_t at = 0;
    for (std::size_t ni = 0; ni < spec.n_list.size(); ++ni)
        for (std::size_t ci = 0; ci < spec.C_list.size(); ++ci) {
            SweepCell cell;
            cell.dim = spec.dim;
            cell.n = spec.n_list[ni];
            cell.C = spec.C_list[ci];
            cell.eps = epsilon_schedule(spec.dim, cell.C, cell.n);
            cell.trials = spec.trials_per_cell;
            std::size_t cert = 0, cap = 0, bip = 0;
            double wall = 0.0;
            for (std::size_t t = 0; t < spec.trials_per_cell; ++t, ++at) {
                const TrialResult& r = results[at];
                cert += r.certificate_holds;
                cap += r.empty_cap_found;
                bip += r.bipartite.value_or(false);
                wall += r.wall_ms;
            }
            const double trials = static_cast<double>(cell.trials);
            cell.frac_certificate = cert / trials;
            cell.frac_empty_cap = cap / trials;
            if (spec.dim == 1) cell.frac_bipartite = bip / trials;
            cell.mean_wall_ms = wall / trials;
            cells.push_back(cell);
        }
    return cells;
}

}  // namespace borsuk
