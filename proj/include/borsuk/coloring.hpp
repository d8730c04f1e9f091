// Constructive colorings of random Borsuk graphs, coloring verification and an
// exact chromatic-number solver for small instances.
#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <vector>

#include "borsuk/caps.hpp"
#include "borsuk/graph.hpp"

namespace borsuk {

/// colors[v] in [0, num_colors); -1 marks an uncolored vertex.
struct Coloring {
    std::vector<int> colors;
    int num_colors = 0;

    bool operator==(const Coloring&) const = default;
};

/// True iff no edge is monochromatic. Throws std::invalid_argument when a
/// vertex is missing or carries a color outside [0, num_colors).
bool verify_coloring(const Graph& g, const Coloring& c);
inline bool verify_coloring(const BorsukGraph& g, const Coloring& c) { return verify_coloring(g.graph, c); }

enum class GreedyOrder { by_index, by_degree };

/// First-fit coloring; by_degree visits vertices by decreasing degree.
Coloring greedy_coloring(const Graph& g, GreedyOrder order = GreedyOrder::by_index);

/// Facet coloring with d+2 colors. Throws PreconditionViolation unless
/// eps < 2 - lambda_d, the range where it is guaranteed proper.
Coloring simplex_coloring(const BorsukGraph& g);

/// Which simplex diameter enters the cap radius 8 sqrt(eps) / sqrt(3(4 - lambda^2)).
/// The cap-removal argument colors a (d-1)-sphere, so lambda_{d-1} is the
/// default; lambda_d is kept for comparison with the published constant.
enum class LambdaVariant { d_minus_1, d };

double variant_lambda(int d, LambdaVariant variant);

/// Smallest cap radius for which removing the cap leaves a (d+1)-colorable
/// graph: 8 sqrt(eps) / sqrt(3 (4 - lambda^2)).
double cap_removal_radius(int d, double eps, LambdaVariant variant = LambdaVariant::d_minus_1);

/// Householder reflection sending `center` to the north pole, applied to p.
std::vector<double> reflect_to_north(std::span<const double> center, std::span<const double> p);

/// Great-circle projection of p (cap centered at N) onto the cap's boundary
/// sphere: (r' / sqrt(1 - p_d^2)) (p_0, ..., p_{d-1}), r' = boundary_radius(r).
/// Returns nullopt when |p_d| >= 1 - 1e-12 (p at a pole).
std::optional<std::vector<double>> boundary_projection(std::span<const double> p, double r);

struct CapRemovalOptions {
    LambdaVariant variant = LambdaVariant::d_minus_1;
    /// Reject caps smaller than cap_removal_radius. Disabling this lets
    /// experiments record what happens with the lambda_d-sized cap.
    bool enforce_radius = true;
};

/// (d+1)-coloring of the points outside an empty cap: rotate the cap to N,
/// color -N with 0 and everything else by the facet color of its boundary
/// projection in S^{d-1}. Throws PreconditionViolation if a point lies in the
/// cap or the cap is too small, std::invalid_argument for bad eps.
Coloring cap_removal_coloring(const PointSet& points, double eps, const SphericalCap& cap,
                              CapRemovalOptions options = {});

enum class SolveStatus { exact, timeout };

struct ChromaticResult {
    SolveStatus status = SolveStatus::exact;
    int value = 0;        // chi(g) when exact
    int lower_bound = 0;  // best known bounds, also meaningful on timeout
    int upper_bound = 0;
};

/// DSATUR branch and bound with a greedy clique lower bound and a DSATUR
/// upper bound. Deterministic; a timeout never reports a value.
ChromaticResult exact_chromatic(const Graph& g, std::chrono::milliseconds time_limit);

}  // namespace borsuk
