#pragma once

// Axially symmetric sets described by a cap-angle function v(r): the set is
// { q : angle(q, e) < v(|q|) } for the fixed pole e = e_n.  v is sampled on
// an increasing radial grid starting at 0 and interpolated linearly; the set
// is empty beyond the last node.

#include <functional>
#include <span>
#include <vector>

#include "isodiam/geomcore.hpp"

namespace isodiam {

class RadialProfile {
public:
    static constexpr std::size_t kMinNodes = 65;

    /// Validates: radii[0] == 0, strictly increasing, at least 65 nodes,
    /// every angle finite and in [0, pi].  Throws std::invalid_argument.
    RadialProfile(Dimension n, std::vector<double> radii, std::vector<double> angles);

    Dimension dim() const noexcept { return n_; }
    int n() const noexcept { return n_.value(); }
    std::size_t size() const noexcept { return r_.size(); }
    std::span<const double> radii() const noexcept { return r_; }
    std::span<const double> angles() const noexcept { return v_; }
    double r_max() const noexcept { return r_.back(); }

    /// Interpolated cap angle; 0 outside [0, r_max].
    double angle_at(double r) const;

    /// True when node i lies in the closure of the set: its own angle or a
    /// neighbouring one is positive.
    bool active(std::size_t i) const;

    RadialProfile scaled(double lambda) const;

    /// Membership of a point of R^n (pole along the last coordinate).
    bool contains(std::span<const double> q) const;

private:
    Dimension n_;
    std::vector<double> r_;
    std::vector<double> v_;
};

/// Piecewise sampler for profiles with kinks and jumps.  A segment that
/// starts where the previous one ended with a different angle is joined by a
/// jump: its first node is moved out by `jump_gap` so the radii stay strictly
/// increasing.
class ProfileBuilder {
public:
    enum class Spacing { uniform, cosine };

    explicit ProfileBuilder(Dimension n, double jump_gap = 1e-12) : n_(n), gap_(jump_gap) {}

    ProfileBuilder& segment(double a, double b, int nodes, Spacing spacing,
                            const std::function<double(double)>& angle);
    ProfileBuilder& node(double r, double angle);

    RadialProfile build() &&;

private:
    Dimension n_;
    double gap_;
    double nominal_ = 0.0;
    std::vector<double> r_;
    std::vector<double> v_;
};

struct DeficitReport {
    double scale = 1.0;      ///< factor applied to reach diameter 2
    double diameter = 0.0;   ///< after normalisation (2 up to refinement tolerance)
    double volume = 0.0;
    double delta = 0.0;      ///< isodiametric deficit
    double r_out = 0.0;
    double r_in = 0.0;
    double hausdorff_lo = 0.0;
    double hausdorff_hi = 0.0;
    double symdiff_min = 0.0;   ///< min over axis centres t of |E delta B(t e)|
    double symdiff_t = 0.0;
    double thm_main_margin = 0.0;  ///< C(n) sqrt(delta) - symdiff_min / (3 |B|)
    bool r_in_axis_restricted = true;
};

struct SymdiffMin {
    double t = 0.0;
    double value = 0.0;
};

/// int_0^{r_max} r^{n-1} cap_area(n, v(r)) dr, Gauss-Legendre per cell.
double volume(const RadialProfile& p);

/// Maximal distance between points of the closure of the set.
double diameter(const RadialProfile& p);

/// (diam/2)^n |B| / |E| - 1.  Throws std::domain_error for zero volume.
double isodiametric_deficit(const RadialProfile& p);

/// |E delta B(t e)|.
double symdiff_axis_ball(const RadialProfile& p, double t);

/// Minimum of symdiff_axis_ball over t in [-1 - r_max, 1 + r_max].
SymdiffMin best_symdiff(const RadialProfile& p);

/// min_t max_{q in E} |q - t e| - 1, floored at 0.
double r_out(const RadialProfile& p);

/// min over axis centres t of sup_{y in B(t e)} dist(y, E).
double r_in(const RadialProfile& p);

/// Distance from the meridian point (rho, z), rho >= 0, to the set.
double distance_to_set(const RadialProfile& p, double rho, double z);

/// Full report after rescaling the profile to diameter 2.
DeficitReport report(const RadialProfile& p);

}  // namespace isodiam
