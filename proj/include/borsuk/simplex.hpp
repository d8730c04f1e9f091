// The regular (d+1)-simplex inscribed in S^d, radial projection of its facets,
// and the facet coloring of the sphere with d+2 colors.
#pragma once

#include <span>
#include <vector>

namespace borsuk {

/// d+2 unit vectors in R^{d+1} with pairwise inner product -1/(d+1).
/// Canonical orientation: v_0 is the north pole and v_1..v_{d+1} are the
/// frame of S^{d-1} scaled into the plane x_d = -1/(d+1).
struct SimplexFrame {
    int dim = 0;
    std::vector<std::vector<double>> vertices;
    double lambda = 0.0;  // diameter of a projected facet
};

/// Frame for S^d, d >= 1.
SimplexFrame simplex_vertices(int d);

/// As simplex_vertices but also accepts d = 0: the two points +-1 of S^0 with
/// lambda = 0, which colors the boundary of a cap on the circle by side.
SimplexFrame simplex_frame(int d);

struct FacetDiameter {
    double numeric;       // maximized over pairs of facet points
    double vertex_chord;  // sqrt(2(d+2)/(d+1))
    bool interior_exceeds_vertices;  // numeric > vertex_chord + 1e-6
};

/// Grid search over pairs of barycentric points of one facet followed by
/// compass-search refinement of the best pairs. Cached per d.
FacetDiameter facet_diameter(int d);

/// lambda_d = facet_diameter(d).numeric; lambda_0 = 0.
double lambda_diameter(int d);

/// argmin_j <p, v_j>, lowest index on exact ties: the facet through which the
/// ray from the origin towards p leaves the simplex.
int facet_color(std::span<const double> p, const SimplexFrame& frame);

}  // namespace borsuk
