#pragma once

// Convex bodies: polytopes in the plane and in space, and bodies of
// revolution given by the right half of a symmetric convex meridian polygon.
// Perimeter means H^{n-1} of the boundary.

#include <array>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "isodiam/profile.hpp"
#include "isodiam/reuleaux.hpp"

namespace isodiam {

using Vec3 = std::array<double, 3>;

struct Polytope {
    int n = 2;
    std::vector<std::vector<double>> vertices;  ///< n = 2: counter-clockwise
    std::vector<std::array<int, 3>> facets;     ///< n = 3: outward-oriented triangles
};

/// Meridian chain (rho, z) from (0, z_lo) to (0, z_hi) along the right half of
/// a convex polygon symmetric under rho -> -rho.  rho >= 0.
struct Revolution {
    Dimension n{2};
    std::vector<double> z;
    std::vector<double> rho;
};

using ConvexBody = std::variant<Polytope, Revolution>;

struct ConvexReport {
    double perimeter = 0.0;
    double volume = 0.0;
    double diameter = 0.0;
    double delta_prime = 0.0;
    double t_F = 0.0;  ///< (|F| / |B|)^{1/n}
};

/// Counter-clockwise hull without collinear points.  Throws
/// std::invalid_argument when the points span no area.
std::vector<Vec2> hull_2d(std::vector<Vec2> pts);

/// Shoelace area of a counter-clockwise polygon.
double polygon_area(std::span<const Vec2> poly);

/// Hull of points in R^n, n in {2, 3}.  Throws std::invalid_argument for
/// fewer than n + 1 points or an affinely flat set.
Polytope convex_hull(const std::vector<std::vector<double>>& points, int n);

/// Hull of the closure of the profile set as a body of revolution.
Revolution hull_of_profile(const RadialProfile& p);

int body_dim(const ConvexBody& f);
double perimeter(const ConvexBody& f);
double body_volume(const ConvexBody& f);
double body_diameter(const ConvexBody& f);
ConvexBody scaled(const ConvexBody& f, double lambda);

/// Membership of q in the closed body enlarged by tol.
bool body_contains(const ConvexBody& f, std::span<const double> q, double tol);

struct CauchyEstimate {
    double value = 0.0;
    double stderr_ = 0.0;
};

/// Monte Carlo mean of projection measures over uniform directions, times
/// sphere_area(n) / |B^{n-1}|.  Directions are drawn serially from `seed`;
/// projections are evaluated in parallel when `parallel` is set.
CauchyEstimate cauchy_perimeter(const Polytope& f, int directions, std::uint64_t seed, bool parallel = true);

/// Measure of the orthogonal projection onto the hyperplane normal to nu.
double projection_measure(const Polytope& f, std::span<const double> nu);

/// P(F) / (n |B|^{1/n} |F|^{(n-1)/n}) - 1.  Throws std::domain_error for zero volume.
double delta_prime(const ConvexBody& f);

ConvexReport convex_report(const ConvexBody& f);

/// P(B) - P(F) after rescaling F to diameter 2.
double check_perimeter_bound(const ConvexBody& f);

struct DeficitLemma {
    double delta = 0.0;
    double delta_prime_hull = 0.0;
    bool holds = false;  ///< delta_prime_hull <= delta + 1e-8
};

DeficitLemma check_deficit_lemma(const RadialProfile& p);

/// Hull of m in [10, 200] uniform points of the unit ball, rescaled to
/// diameter 2.
Polytope random_hull(int n, std::uint64_t seed);

/// Hull of `samples` boundary points of a Reuleaux polygon.
Polytope reuleaux_polytope(const ReuleauxShape& s, int samples);

}  // namespace isodiam
