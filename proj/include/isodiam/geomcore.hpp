#pragma once

// Dimension-generic scalar geometry on the unit sphere: ball volumes,
// spherical-cap measures and their inverse, the meridian chord, the
// angular half-width psi of the diameter-2 exclusion cap, and the
// explicit stability constant C(n).

#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace isodiam {

inline constexpr double kPi = std::numbers::pi;
inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 8;

/// Ambient dimension n, 2 <= n <= 8.
class Dimension {
public:
    explicit Dimension(int n) : n_(n)
    {
        if (n < kMinDim || n > kMaxDim)
            throw std::out_of_range("dimension " + std::to_string(n) + " outside [2, 8]");
    }
    int value() const noexcept { return n_; }
    friend bool operator==(Dimension, Dimension) = default;

private:
    int n_;
};

/// Geodesic radius of a cap on the unit sphere, in [0, pi].
class CapAngle {
public:
    explicit CapAngle(double alpha) : a_(alpha)
    {
        if (!(alpha >= 0.0 && alpha <= kPi))
            throw std::out_of_range("cap angle " + std::to_string(alpha) + " outside [0, pi]");
    }
    /// Explicit clamping into [0, pi]; the only sanctioned way to fold
    /// slightly out-of-range values.
    static CapAngle clamped(double alpha)
    {
        if (alpha != alpha)
            throw std::domain_error("cap angle is NaN");
        return CapAngle(alpha < 0.0 ? 0.0 : (alpha > kPi ? kPi : alpha));
    }
    double value() const noexcept { return a_; }

private:
    double a_;
};

/// |B^n| for 1 <= n <= 8 via V_n = V_{n-2} 2 pi / n.
double unit_ball_volume(int n);

/// H^{n-1}(S^{n-1}) = n |B^n|.
double sphere_area(Dimension n);

/// H^{n-1} of the open cap K[e, alpha] on the unit sphere of R^n.
double cap_area(Dimension n, CapAngle alpha);

/// Same measure by composite 64-point Gauss-Legendre panels of width pi/2.
/// Kept as an independent route for cross-checking cap_area.
double cap_area_quadrature(Dimension n, CapAngle alpha);

/// Angle whose cap has measure `area`; area in [0, sphere_area(n)].
CapAngle inverse_cap_area(Dimension n, double area);

/// Distance between points at radii r1, r2 separated by angle theta.
double chord(double r1, double r2, CapAngle theta);

/// Geodesic radius (around -p) of the part of the sphere of radius 1-eps+t
/// lying at distance >= 2 from (1+eps-s) p.  Requires 0 <= s <= t <= eps < 4/9.
CapAngle psi(double s, double t, double eps);

struct ConstantsTable {
    int n = 0;
    double C0 = 0.0;          ///< quantitative isoperimetric constant 181 n^3 / (2 - 2^{(n-1)/n})^{3/2}
    double C = 0.0;           ///< C0 + 1
    double omega_prev = 0.0;  ///< |B^{n-1}|
    double sphere_area = 0.0; ///< H^{n-1}(S^{n-1})
};

ConstantsTable constant_C(Dimension n);

// Unchecked hot-path variants used by the profile and symmetric-difference
// integrators.  Callers guarantee 2 <= n <= 8 and alpha in [0, pi].
namespace detail {
double cap_area_raw(int n, double alpha);
double sphere_area_raw(int n);
}  // namespace detail

/// acos with its argument folded into [-1, 1].  Folds larger than 1e-9 are
/// counted and reported on std::clog since they indicate a logic error
/// rather than rounding.
double clamped_acos(double x);
std::uint64_t clamp_event_count();

}  // namespace isodiam
