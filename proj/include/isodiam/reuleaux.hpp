#pragma once

// Regular Reuleaux polygons: k odd, every boundary arc has radius d and is
// centred at the vertex opposite to it, giving constant width d.

#include <array>
#include <vector>

namespace isodiam {

using Vec2 = std::array<double, 2>;

struct ReuleauxArc {
    Vec2 center;
    double start = 0.0;  ///< polar angle around center, counter-clockwise
    double end = 0.0;
};

struct ReuleauxShape {
    int k = 3;
    double d = 1.0;
    std::vector<Vec2> vertices;  ///< counter-clockwise, on the circle of radius circumradius()
    std::vector<ReuleauxArc> arcs;  ///< arcs[m] joins vertices[m] to vertices[m + 1]

    double circumradius() const;
};

/// Throws std::invalid_argument for even k, k < 3 or d <= 0.
ReuleauxShape reuleaux(int k, double d);

/// Sum of arc lengths, d times the total turning angle.
double reuleaux_perimeter(const ReuleauxShape& s);

/// `samples` boundary points spread over the arcs in order; every vertex is
/// included.
std::vector<Vec2> reuleaux_polygon(const ReuleauxShape& s, int samples);

/// Support function max_{x in shape} x . (cos phi, sin phi).
double reuleaux_support(const ReuleauxShape& s, double phi);

}  // namespace isodiam
