#pragma once

// Near-optimal sets for the diameter-constrained volume problem.  A set is
// the unit ball with a bump of caps around p on the shell (1, 1+eps] and a
// notch of caps around -p on [1-eps, 1]; the notch angle g is the upper
// envelope of bump angle f plus pi sqrt(t - s), which keeps diameter 2.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isodiam/profile.hpp"

namespace isodiam {

/// Piecewise-linear function on a strictly increasing grid.
struct SampledFunction {
    std::vector<double> x;
    std::vector<double> y;

    double operator()(double t) const;
    std::size_t size() const noexcept { return x.size(); }
};

struct FamilyParams {
    double rho = 0.0;
    double c = 0.0;
    double theta = 0.0;
    double l = 0.0;  ///< |log eps| of the unshifted family
};

struct CapFunctionPair {
    Dimension n{2};
    double eps = 0.0;
    SampledFunction f;       ///< bump angle, t in [0, eps]
    SampledFunction g;       ///< notch angle, same grid
    std::vector<double> s_star;  ///< maximiser of the envelope at each grid t
    std::string family;
    std::optional<FamilyParams> params;
};

struct Envelope {
    SampledFunction g;
    std::vector<double> argmax;
};

/// g(t) = max_{0 <= s <= t} f(s) + pi sqrt(t - s) on the grid of f, exact for
/// the piecewise-linear f.  f must start at 0 and end at eps.
Envelope envelope_g(const SampledFunction& f, double eps);

/// Grid nodes used by the families on each side of the unit sphere.
inline constexpr int kFamilyNodes = 2049;

/// Validates 0 < eps < 4/9, f < pi/8, g >= f; throws std::invalid_argument.
void validate_pair(const CapFunctionPair& pair);

/// Profile of the set: v = pi below 1-eps, pi - g(r-1+eps) on [1-eps, 1],
/// f(1+eps-r) on (1, 1+eps].
RadialProfile build_E(const CapFunctionPair& pair, int ball_nodes = 65);

/// (1/vol) int_0^eps cap_area(g) - cap_area(f) dt.
double deficit_upper_bound(const CapFunctionPair& pair, double vol);

/// int_a^b cap_area(f(t)) dt.
double bump_cap_integral(const CapFunctionPair& pair, double a, double b);

/// f(t) = pi t / (8 eps), 0 < eps <= 1/16.
CapFunctionPair family_n2(Dimension n, double eps, int nodes = kFamilyNodes);

/// f(0) = rho, f = 0 elsewhere; 0 < eps < 4/9, 0 < rho < pi/8.
CapFunctionPair family_high_n(Dimension n, double eps, double rho, int nodes = kFamilyNodes);

inline constexpr double kN3DefaultC = 0.19634954084936207;  // pi / 16
inline constexpr double kN3DefaultTheta = 0.7;

/// c (t/eps)^{|log eps|} on [0, eps].
SampledFunction n3_base(double eps, double c, int nodes = kFamilyNodes);

/// The base function shifted by theta eps, on [0, (1-theta) eps].
/// 0 < eps < e^-2, 0 < c < pi/8, e^-1/2 < theta < 1.
CapFunctionPair family_n3(Dimension n, double eps, double c = kN3DefaultC, double theta = kN3DefaultTheta,
                          int nodes = kFamilyNodes);

/// Unit ball minus the ball of radius r centred at distance `offset` from
/// the origin on the axis, on the side opposite the pole.
RadialProfile ball_minus_ball(Dimension n, double r, double offset, int nodes = 1025);

RadialProfile ball_profile(Dimension n, double radius = 1.0, int nodes = 65);

/// Smooth random profile with 129 nodes, r_max in [0.6, 1.4].
RadialProfile random_profile(Dimension n, std::uint64_t seed);

}  // namespace isodiam
