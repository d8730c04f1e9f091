// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
//   acceptance [--only K ...] [--jobs J]
//
// Every randomized criterion runs with one worker first; criterion 12 reruns
// them with J workers (default 4) and compares result fingerprints.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "borsuk/caps.hpp"
#include "borsuk/certificate.hpp"
#include "borsuk/coloring.hpp"
#include "borsuk/delta_net.hpp"
#include "borsuk/experiment.hpp"
#include "borsuk/graph.hpp"
#include "borsuk/poisson.hpp"
#include "borsuk/rng.hpp"
#include "borsuk/simplex.hpp"
#include "borsuk/sphere.hpp"
#include "oracles.hpp"

using namespace borsuk;
using std::numbers::pi;

namespace {

// FNV-1a over the bit patterns of everything a run produced.
struct Fingerprint {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    void add(std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    }
    void add(double x) {
        std::uint64_t bits;
        std::memcpy(&bits, &x, sizeof bits);
        add(bits);
    }
    void add(bool b) { add(std::uint64_t{b}); }
    void add(const PointSet& p) {
        for (double x : p.flat()) add(x);
    }
    void add(const Graph& g) {
        for (auto [u, v] : g.edges()) add((std::uint64_t{u} << 32) | v);
    }
    void add(const TrialResult& r) {
        add(static_cast<std::uint64_t>(r.n_effective));
        add(r.eps);
        add(r.certificate_holds);
        add(static_cast<std::uint64_t>(r.certificate_empty_caps));
        add(r.empty_cap_found);
        add(static_cast<std::uint64_t>(r.coloring_d1_proper ? 1 + *r.coloring_d1_proper : 0));
        add(static_cast<std::uint64_t>(r.simplex_coloring_proper ? 1 + *r.simplex_coloring_proper : 0));
        add(static_cast<std::uint64_t>(r.odd_girth ? *r.odd_girth : 0));
        add(static_cast<std::uint64_t>(r.bipartite ? 1 + *r.bipartite : 0));
        add(static_cast<std::uint64_t>(r.edge_count));
    }
};

struct Outcome {
    bool pass = false;
    std::string detail;
    std::uint64_t fingerprint = 0;  // 0 for deterministic-only criteria
};

struct Criterion {
    int id;
    const char* title;
    double limit_s;
    bool randomized;
    std::function<Outcome(unsigned jobs)> run;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// 1 -----------------------------------------------------------------------
Outcome adjacency_identity(unsigned jobs) {
    Fingerprint fp;
    double worst = 0.0;
    std::size_t disagreements = 0, banded = 0, pairs = 0;
    SplitMix64 eps_rng(0xa11ce);
    for (int d = 1; d <= 3; ++d) {
        const std::int64_t count = d == 1 ? 33334 : 33333;
        const PointSet pts = sample_uniform(d, 2 * count, derive_seed(1, {static_cast<std::uint64_t>(d)}), jobs);
        fp.add(pts);
        for (std::int64_t k = 0; k < count; ++k) {
            const auto x = pts[static_cast<std::size_t>(2 * k)], y = pts[static_cast<std::size_t>(2 * k + 1)];
            const double dist = distance(x, y), gap = antipodal_gap(x, y);
            worst = std::max(worst, std::abs(dist * dist + gap * gap - 4.0));
            const double eps = 2.0 * eps_rng.uniform_open0();
            ++pairs;
            if (std::abs(dist - (2.0 - eps)) <= 1e-12) {
                ++banded;
                continue;
            }
            if ((dist > 2.0 - eps) != (gap < adjacency_threshold(eps))) ++disagreements;
        }
    }
    return {worst <= 1e-9 && disagreements == 0 && pairs == 100000,
            fmt("%zu pairs, max |identity - 4| = %.2e (tol 1e-9), %zu disagreements, %zu in the 1e-12 band", pairs,
                worst, disagreements, banded),
            fp.h};
}

// 2 -----------------------------------------------------------------------
Outcome graph_oracle(unsigned jobs) {
    Fingerprint fp;
    int matches = 0, instances = 0;
    std::size_t edges = 0;
    for (int k = 0; k < 50; ++k) {
        const int d = 1 + k % 3;
        const double eps = (k / 3) % 2 == 0 ? 0.25 : 0.05;
        const std::int64_t n = 500 + 50 * k;
        const PointSet pts = sample_uniform(d, n, derive_seed(2, {static_cast<std::uint64_t>(k)}), jobs);
        const BorsukGraph g = build_graph(pts, eps);
        fp.add(g.graph);
        ++instances;
        edges += g.graph.edge_count();
        matches += g.graph.edges() == oracle::brute_edges(pts, eps);
    }
    return {matches == instances, fmt("%d/%d edge sets identical to all-pairs (n 500..2950, %zu edges total)", matches,
                                      instances, edges),
            fp.h};
}

// 3 -----------------------------------------------------------------------
Outcome odd_girth_bound(unsigned jobs) {
    Fingerprint fp;
    int instances = 0, finite = 0, violations = 0;
    for (int d = 1; d <= 3; ++d)
        for (double eps : {0.25, 0.04, 0.01})
            for (std::uint64_t rep = 0; rep < 12; ++rep) {
                const PointSet pts = sample_uniform(d, 600, derive_seed(3, {static_cast<std::uint64_t>(d), rep,
                                                                            static_cast<std::uint64_t>(eps * 100)}),
                                                    jobs);
                const auto og = odd_girth(build_graph(pts, eps));
                ++instances;
                fp.add(static_cast<std::uint64_t>(og ? *og : 0));
                if (!og) continue;
                ++finite;
                if (!(static_cast<double>(*og) > 1.0 / std::sqrt(eps))) ++violations;
            }
    PointSet five(1);
    for (double deg : {0.0, 144.0, 288.0, 72.0, 216.0}) {
        const double c[2] = {std::cos(deg * pi / 180), std::sin(deg * pi / 180)};
        five.push_back(std::span<const double>(c, 2));
    }
    const auto og5 = odd_girth(build_graph(five, 0.5));
    const bool five_ok = og5 && *og5 == 5;
    return {instances >= 100 && violations == 0 && five_ok,
            fmt("%d instances, %d with an odd cycle, %d at or below 1/sqrt(eps); five-cycle instance -> %s", instances,
                finite, violations, og5 ? std::to_string(*og5).c_str() : "none"),
            fp.h};
}

// 4 -----------------------------------------------------------------------
Outcome cap_area(unsigned) {
    double worst = 0.0;
    for (int i = 1; i <= 14; ++i) {
        const double r = 0.1 * i;
        worst = std::max(worst, std::abs(cap_area_fraction(2, r) - (1.0 - std::cos(angular_radius(r))) / 2.0));
    }
    int upper_fail = 0, corrected_fail = 0, points = 0;
    for (int d = 1; d <= 5; ++d)
        for (int i = 1; i <= 19; ++i) {
            const double r = 0.05 * i, f = cap_area_fraction(d, r);
            ++points;
            upper_fail += !(f <= cap_area_paper_bounds(d, r).upper);
            corrected_fail += !(f >= corrected_cap_area_lower_bound(d, r));
        }
    const double true_val = cap_area_fraction(2, 0.5), stated = cap_area_paper_bounds(2, 0.5).lower;
    const bool violated = true_val < stated;
    return {worst <= 1e-9 && upper_fail == 0 && corrected_fail == 0 && violated,
            fmt("S^2 max err %.1e (tol 1e-9); upper bound fails %d/%d; corrected lower fails %d/%d; "
                "published lower bound at d=2 r=0.5: true %.4f < %.4f, violated as expected",
                worst, upper_fail, points, corrected_fail, points, true_val, stated)};
}

// 5 -----------------------------------------------------------------------
Outcome delta_nets(unsigned) {
    Fingerprint fp;
    int ok = 0, total = 0;
    std::string sizes;
    for (int d = 1; d <= 3; ++d)
        for (double delta : {0.1, 0.2, 0.5}) {
            const DeltaNet net = build_delta_net(d, delta, 0, derive_seed(5, {static_cast<std::uint64_t>(d)}));
            fp.add(net.centers);
            double min_sep = 4.0;
            for (std::size_t i = 0; i < net.size(); ++i)
                for (std::size_t j = i + 1; j < net.size(); ++j)
                    min_sep = std::min(min_sep, oracle::norm_diff(net.centers[i], net.centers[j]));
            const auto b = net_size_bounds(d, delta);
            const double N = static_cast<double>(net.size());
            const bool good = min_sep > delta && net.candidate_cover_radius <= delta && b.lower <= N && N <= b.upper;
            ok += good;
            ++total;
            sizes += fmt(" d%d/%.1f:%zu", d, delta, net.size());
        }
    return {ok == total, fmt("%d/%d nets separated, covering and within the size window; N =%s", ok, total,
                             sizes.c_str()),
            fp.h};
}

// 6 -----------------------------------------------------------------------
Outcome lambda_values(unsigned) {
    const FacetDiameter f1 = facet_diameter(1), f2 = facet_diameter(2);
    const double l1 = f1.numeric, l2 = f2.numeric;
    const double e1 = std::abs(l1 - std::sqrt(3.0)), e2 = std::abs(l2 - std::sqrt(8.0 / 3.0));
    // The target for d=2 is the vertex chord; the projected facet is wider
    // (vertex to opposite edge midpoint, sqrt(2 + 2/sqrt3)), so this line is red.
    return {e1 <= 1e-6 && e2 <= 1e-6 && l1 < 2 && l2 < 2,
            fmt("lambda_1 = %.9f (err %.1e), lambda_2 = %.9f vs sqrt(8/3) = %.9f (err %.1e), tol 1e-6; "
                "d=2 interior pair beats the vertex chord: %s, vertex-to-edge-midpoint chord %.9f",
                l1, e1, l2, f2.vertex_chord, e2, f2.interior_exceeds_vertices ? "yes" : "no",
                std::sqrt(2.0 + 2.0 / std::sqrt(3.0)))};
}

// 7 -----------------------------------------------------------------------
Outcome coloring_soundness(unsigned jobs) {
    Fingerprint fp;
    int simplex_ok = 0, simplex_total = 0;
    for (int d = 1; d <= 3; ++d) {
        const double limit = 2.0 - lambda_diameter(d);
        for (std::uint64_t k = 0; k < 50; ++k) {
            const double eps = limit * (0.02 + 0.96 * static_cast<double>(k) / 50.0);
            const BorsukGraph g =
                build_graph(sample_uniform(d, 1500, derive_seed(7, {static_cast<std::uint64_t>(d), k}), jobs), eps);
            const Coloring c = simplex_coloring(g);
            fp.add(static_cast<std::uint64_t>(g.graph.edge_count()));
            ++simplex_total;
            simplex_ok += verify_coloring(g, c) && c.num_colors == d + 2;
        }
    }
    int found[3] = {0, 0, 0}, proper[3] = {0, 0, 0};
    for (int d = 1; d <= 2; ++d) {
        const double C = 0.5 * upper_bound_constant(d);
        const std::int64_t n = 2000;
        const double eps = epsilon_schedule(d, C, n);
        for (std::uint64_t k = 0; k < 60; ++k) {
            const PointSet pts = sample_uniform(d, n, derive_seed(77, {static_cast<std::uint64_t>(d), k}), jobs);
            const auto cap = find_empty_cap(pts, eps);
            fp.add(cap.has_value());
            if (!cap) continue;
            ++found[d];
            const Coloring c = cap_removal_coloring(pts, eps, *cap);
            proper[d] += verify_coloring(build_graph(pts, eps), c) && c.num_colors == d + 1;
        }
    }
    const bool pass = simplex_ok == simplex_total && found[1] >= 50 && found[2] >= 50 && proper[1] == found[1] &&
                      proper[2] == found[2];
    return {pass,
            fmt("simplex proper %d/%d; cap removal proper d=1 %d/%d, d=2 %d/%d (need >= 50 caps each)", simplex_ok,
                simplex_total, proper[1], found[1], proper[2], found[2]),
            fp.h};
}

// 8 -----------------------------------------------------------------------
Outcome exact_solver(unsigned) {
    SplitMix64 rng(8);
    int agree = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng.below(10);
        const double p = 0.1 + 0.8 * rng.uniform();
        std::vector<Edge> e;
        std::vector<std::pair<int, int>> pe;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng.uniform() < p) {
                    e.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
                    pe.emplace_back(static_cast<int>(i), static_cast<int>(j));
                }
        const ChromaticResult r = exact_chromatic(Graph::from_edges(n, e), std::chrono::seconds(10));
        agree += r.status == SolveStatus::exact && r.value == oracle::brute_chromatic(n, pe);
    }
    return {agree == 200, fmt("%d/200 graphs (n <= 10) agree with set-partition enumeration", agree)};
}

// 9 -----------------------------------------------------------------------
Outcome circle_thresholds(unsigned jobs) {
    Fingerprint fp;
    const std::int64_t n = 100000;
    std::vector<TrialConfig> three, two;
    for (std::uint64_t t = 0; t < 30; ++t) {
        TrialConfig c;
        c.dim = 1;
        c.n = n;
        c.mode = EpsMode::schedule;
        c.C = circle_three_color_constant();
        c.seed = derive_seed(9, {1, t});
        c.certificate_rule = CoverRule::arc_gap;
        three.push_back(c);
        c.C = pi * pi / 8;
        c.seed = derive_seed(9, {2, t});
        c.certificate_rule = CoverRule::net;
        two.push_back(c);
    }
    int holds = 0, bip = 0, net_holds = 0;
    for (const TrialResult& r : run_trials(three, jobs)) {
        fp.add(r);
        holds += r.certificate_holds;
        // The grid-of-caps rule on the same points, for comparison only.
        net_holds += lsb_certificate(trial_points(r.config), r.eps, CoverRule::net).holds;
    }
    for (const TrialResult& r : run_trials(two, jobs)) {
        fp.add(r);
        bip += r.bipartite.value_or(false);
    }
    return {holds >= 27 && bip >= 27,
            fmt("(a) C=9pi^2/4: certificate %d/30 (need 27; net-of-caps rule alone: %d/30); "
                "(b) C=pi^2/8: bipartite %d/30 (need 27)",
                holds, net_holds, bip),
            fp.h};
}

// 10 ----------------------------------------------------------------------
struct CellStats {
    int certificate = 0, empty_cap = 0, proper = 0, trials = 0;
};

CellStats d2_cell(std::int64_t n, double C, std::uint64_t tag, unsigned jobs, Fingerprint& fp) {
    std::vector<TrialConfig> cfgs;
    for (std::uint64_t t = 0; t < 30; ++t) {
        TrialConfig c;
        c.dim = 2;
        c.n = n;
        c.mode = EpsMode::schedule;
        c.C = C;
        c.seed = derive_seed(10, {tag, static_cast<std::uint64_t>(n), t});
        c.odd_girth_max_n = 0;
        cfgs.push_back(c);
    }
    CellStats s;
    for (const TrialResult& r : run_trials(cfgs, jobs)) {
        fp.add(r);
        ++s.trials;
        s.certificate += r.certificate_holds;
        s.empty_cap += r.empty_cap_found;
        s.proper += r.coloring_d1_proper.value_or(false);
    }
    return s;
}

Outcome sphere_thresholds(unsigned jobs) {
    Fingerprint fp;
    const double c_lower = 1.1 * lower_bound_constant(2), c_upper = 0.5 * upper_bound_constant(2);
    const CellStats lo = d2_cell(20000, c_lower, 1, jobs, fp);
    const CellStats up = d2_cell(20000, c_upper, 2, jobs, fp);
    const CellStats lo_small = d2_cell(5000, c_lower, 1, jobs, fp);
    const CellStats up_small = d2_cell(5000, c_upper, 2, jobs, fp);
    const bool trend = lo.certificate >= lo_small.certificate - 3 && up.empty_cap >= up_small.empty_cap - 3;
    const bool pass = lo.certificate >= 24 && up.empty_cap >= 24 && up.proper == up.empty_cap && trend;
    return {pass,
            fmt("n=2e4: certificate %d/30 at 1.1x%.2f (need 24); empty cap %d/30 at 0.5x%.6f (need 24), "
                "3-colorings proper %d/%d; trend n=5e3->2e4: certificate %d->%d, empty cap %d->%d (band 0.1)",
                lo.certificate, lower_bound_constant(2), up.empty_cap, upper_bound_constant(2), up.proper,
                up.empty_cap, lo_small.certificate, lo.certificate, up_small.empty_cap, up.empty_cap),
            fp.h};
}

// 11 ----------------------------------------------------------------------
Outcome poisson_machinery(unsigned) {
    Fingerprint fp;
    int tail_fail = 0;
    for (std::int64_t n = 0; n <= 200; ++n) {
        const PoissonTail t = poisson_tail_check(n);
        tail_fail += !(t.exact <= t.bound);
    }
    // Points of a Poissonized trial falling in a fixed cap F.
    const SphericalCap F{SpherePoint::north_pole(2), 0.5};
    const std::int64_t n = 100;
    const double mean_expected = 2.0 * n * cap_area_fraction(2, F.radius);
    double sum = 0.0, sq = 0.0;
    const int draws = 10000;
    for (int t = 0; t < draws; ++t) {
        TrialConfig c;
        c.dim = 2;
        c.n = n;
        c.eps_fixed = 0.1;
        c.poissonized = true;
        c.seed = derive_seed(11, {static_cast<std::uint64_t>(t)});
        const PointSet pts = trial_points(c);
        int k = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) k += cap_contains(F, pts[i]);
        fp.add(static_cast<std::uint64_t>(k));
        sum += k;
        sq += static_cast<double>(k) * k;
    }
    const double mean = sum / draws, var = sq / draws - mean * mean;
    const double sigma = std::sqrt(mean_expected / draws);
    const double z = (mean - mean_expected) / sigma;
    return {tail_fail == 0 && std::abs(z) <= 3.0,
            fmt("tail <= exp(-0.306n) fails at %d of n=0..200; cap count mean %.4f vs %.4f (z = %.2f, |z| <= 3), "
                "variance %.3f",
                tail_fail, mean, mean_expected, z, var),
            fp.h};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance suite"};
    std::vector<int> only;
    unsigned rerun_jobs = 4;
    app.add_option("--only", only, "criteria to run (default: all)");
    app.add_option("--jobs", rerun_jobs, "workers for the determinism rerun")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);
    const std::set<int> selected(only.begin(), only.end());
    auto wanted = [&](int id) { return selected.empty() || selected.count(id) > 0; };

    const std::vector<Criterion> criteria{
        {1, "adjacency identity", 10, true, adjacency_identity},
        {2, "graph build vs brute force", 60, true, graph_oracle},
        {3, "odd girth", 60, true, odd_girth_bound},
        {4, "cap area", 10, false, cap_area},
        {5, "delta-net bounds", 120, true, delta_nets},
        {6, "lambda_d", 60, false, lambda_values},
        {7, "coloring soundness", 300, true, coloring_soundness},
        {8, "exact solver oracle", 120, false, exact_solver},
        {9, "d=1 thresholds", 900, true, circle_thresholds},
        {10, "d=2 threshold directions", 1800, true, sphere_thresholds},
        {11, "Poisson machinery", 60, true, poisson_machinery},
    };

    int passed = 0, run = 0;
    std::vector<std::pair<const Criterion*, std::uint64_t>> fingerprints;
    for (const Criterion& c : criteria) {
        if (!wanted(c.id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run(1);
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = o.pass && secs < c.limit_s;
        std::printf("%s %2d %-26s %s [%.1f s, limit %.0f s]\n", ok ? "PASS" : "FAIL", c.id, c.title,
                    o.detail.c_str(), secs, c.limit_s);
        std::fflush(stdout);
        ++run;
        passed += ok;
        if (c.randomized) fingerprints.emplace_back(&c, o.fingerprint);
    }

    if (wanted(12)) {
        const auto start = std::chrono::steady_clock::now();
        int same = 0;
        std::string diffs;
        for (auto [c, fp] : fingerprints) {
            std::uint64_t again = 0;
            try {
                again = c->run(rerun_jobs).fingerprint;
            } catch (const std::exception&) {
            }
            if (again == fp)
                ++same;
            else
                diffs += " " + std::to_string(c->id);
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = same == static_cast<int>(fingerprints.size()) && !fingerprints.empty();
        std::printf("%s %2d %-26s %d/%zu randomized criteria identical with --jobs %u%s%s [%.1f s]\n",
                    ok ? "PASS" : "FAIL", 12, "determinism", same, fingerprints.size(), rerun_jobs,
                    diffs.empty() ? "" : "; differing:", diffs.c_str(), secs);
        ++run;
        passed += ok;
    }
    std::printf("acceptance: %d/%d criteria passed\n", passed, run);
    return passed == run ? 0 : 1;
}
