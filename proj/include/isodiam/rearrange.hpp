#pragma once

// Spherical-cap rearrangement of a set given by a membership oracle: every
// slice by a sphere |q| = r is replaced by the cap around e = e_n of the same
// measure.  Slice measures are Monte Carlo estimates with per-radius streams.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "isodiam/profile.hpp"

namespace isodiam {

struct IndicatorSet {
    Dimension n{2};
    std::function<bool(std::span<const double>)> contains;
    double r_bound = 1.0;  ///< contains(q) is false for |q| > r_bound
    std::optional<double> known_volume;
    std::optional<double> known_diameter;
};

struct SliceEstimate {
    CapAngle angle{0.0};
    double fraction = 0.0;        ///< hit rate on the sphere
    double fraction_stderr = 0.0; ///< sqrt(p (1 - p) / samples)
};

/// Slice of E on the sphere of radius r; `seed` drives a single stream.
SliceEstimate slice_angle(const IndicatorSet& e, double r, int samples, std::uint64_t seed);

struct Rearrangement {
    RadialProfile profile;
    std::vector<double> fractions;        ///< per node, node 0 at the origin
    std::vector<double> fraction_stderr;
    double volume_stderr = 0.0;           ///< propagated Monte Carlo error of volume(profile)
};

/// Profile on grid_size + 1 radii r_bound i / grid_size.  Node 0 takes the
/// membership of the origin.  Throws std::invalid_argument when the slice at
/// r_bound is not empty.
Rearrangement rearrange_sc(const IndicatorSet& e, int grid_size, int samples, std::uint64_t seed,
                           bool parallel = true);

struct SignedBall {
    std::vector<double> center;
    double radius = 0.0;
    int sign = 1;  ///< +1 adds the ball, -1 removes it
};

/// Union of the positive balls minus the union of the negative ones.  The
/// volume is filled in when the positive balls are pairwise disjoint and no
/// negative balls are present; the diameter likewise.
IndicatorSet ball_oracle(Dimension n, std::vector<SignedBall> balls);

/// 2 to 4 pairwise disjoint balls inside B(0, 1.5), seeded.
IndicatorSet random_ball_union(Dimension n, std::uint64_t seed);

}  // namespace isodiam
