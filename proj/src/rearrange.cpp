#include "isodiam/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "isodiam/kernels.hpp"
#include "isodiam/quadrature.hpp"

namespace isodiam {

namespace {

SliceEstimate estimate_from_hits(Dimension n, std::int64_t hits, int samples)
{
    SliceEstimate est;
    est.fraction = static_cast<double>(hits) / samples;
    est.fraction_stderr = std::sqrt(est.fraction * (1.0 - est.fraction) / samples);
    est.angle = inverse_cap_area(n, std::min(est.fraction * sphere_area(n), sphere_area(n)));
    return est;
}

}  // namespace

SliceEstimate slice_angle(const IndicatorSet& e, double r, int samples, std::uint64_t seed)
{
    if (!(r > 0.0 && r <= e.r_bound))
        throw std::out_of_range("slice_angle: radius outside (0, r_bound]");
    if (samples < 1000)
        throw std::invalid_argument("slice_angle: need at least 1000 samples");
    const double radius[1] = {r};
    const auto hits = kernels::sphere_hits_serial(e.contains, e.n.value(), radius, samples, seed);
    return estimate_from_hits(e.n, hits[0], samples);
}

Rearrangement rearrange_sc(const IndicatorSet& e, int grid_size, int samples, std::uint64_t seed, bool parallel)
{
    if (grid_size < static_cast<int>(RadialProfile::kMinNodes) - 1)
        throw std::invalid_argument("rearrange_sc: grid_size must be at least 64");
    if (samples < 1000)
        throw std::invalid_argument("rearrange_sc: need at least 1000 samples per radius");
    if (!(e.r_bound > 0.0))
        throw std::invalid_argument("rearrange_sc: r_bound must be positive");
    const int n = e.n.value();

    std::vector<double> radii(static_cast<std::size_t>(grid_size));
    for (int i = 1; i <= grid_size; ++i)
        radii[i - 1] = e.r_bound * i / grid_size;
    radii.back() = e.r_bound;
    const auto hits = parallel ? kernels::sphere_hits_parallel(e.contains, n, radii, samples, seed)
                               : kernels::sphere_hits_serial(e.contains, n, radii, samples, seed);
    if (hits.back() != 0)
        throw std::invalid_argument("rearrange_sc: oracle has points on the sphere of radius r_bound");

    const std::vector<double> origin(static_cast<std::size_t>(n), 0.0);
    const bool at_origin = e.contains(origin);

    std::vector<double> r(grid_size + 1), v(grid_size + 1);
    Rearrangement out{RadialProfile(e.n, uniform_grid(0.0, e.r_bound, grid_size + 1),
                                    std::vector<double>(grid_size + 1, 0.0)),
                      {}, {}, 0.0};
    out.fractions.assign(grid_size + 1, 0.0);
    out.fraction_stderr.assign(grid_size + 1, 0.0);
    r[0] = 0.0;
    v[0] = at_origin ? kPi : 0.0;
    out.fractions[0] = at_origin ? 1.0 : 0.0;
    for (int i = 1; i <= grid_size; ++i) {
        const SliceEstimate s = estimate_from_hits(e.n, hits[i - 1], samples);
        r[i] = radii[i - 1];
        v[i] = s.angle.value();
        out.fractions[i] = s.fraction;
        out.fraction_stderr[i] = s.fraction_stderr;
    }
    out.profile = RadialProfile(e.n, std::move(r), std::move(v));

    // linearised propagation through trapezoid weights
    const double h = e.r_bound / grid_size;
    const double full = sphere_area(e.n);
    double var = 0.0;
    for (int i = 1; i <= grid_size; ++i) {
        const double w = (i == grid_size ? 0.5 : 1.0) * h;
        const double c = w * std::pow(radii[i - 1], n - 1) * full * out.fraction_stderr[i];
        var += c * c;
    }
    out.volume_stderr = std::sqrt(var);
    return out;
}

IndicatorSet ball_oracle(Dimension n, std::vector<SignedBall> balls)
{
    const int dim = n.value();
    double bound = 0.0;
    bool any_negative = false;
    for (const auto& b : balls) {
        if (static_cast<int>(b.center.size()) != dim)
            throw std::invalid_argument("ball_oracle: center dimension mismatch");
        if (!(b.radius > 0.0))
            throw std::invalid_argument("ball_oracle: radius must be positive");
        if (b.sign != 1 && b.sign != -1)
            throw std::invalid_argument("ball_oracle: sign must be +1 or -1");
        double c2 = 0.0;
        for (double x : b.center)
            c2 += x * x;
        if (b.sign > 0)
            bound = std::max(bound, std::sqrt(c2) + b.radius);
        else
            any_negative = true;
    }
    if (!(bound > 0.0))
        throw std::invalid_argument("ball_oracle: no positive ball");

    auto dist = [](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k)
            s += (a[k] - b[k]) * (a[k] - b[k]);
        return std::sqrt(s);
    };

    IndicatorSet set;
    set.n = n;
    set.r_bound = bound * (1.0 + 1e-9);
    if (!any_negative) {
        bool disjoint = true;
        double vol = 0.0;
        double diam = 0.0;
        for (std::size_t i = 0; i < balls.size(); ++i) {
            vol += unit_ball_volume(dim) * std::pow(balls[i].radius, dim);
            diam = std::max(diam, 2.0 * balls[i].radius);
            for (std::size_t j = i + 1; j < balls.size(); ++j) {
                const double cd = dist(balls[i].center, balls[j].center);
                if (cd <= balls[i].radius + balls[j].radius)
                    disjoint = false;
                diam = std::max(diam, cd + balls[i].radius + balls[j].radius);
            }
        }
        if (disjoint)
            set.known_volume = vol;
        // the diameter formula holds for any union of balls
        set.known_diameter = diam;
    }
    set.contains = [balls = std::move(balls)](std::span<const double> q) {
        bool in = false;
        for (const auto& b : balls) {
            double s = 0.0;
            for (std::size_t k = 0; k < q.size(); ++k)
                s += (q[k] - b.center[k]) * (q[k] - b.center[k]);
            if (s < b.radius * b.radius) {
                if (b.sign < 0)
                    return false;
                in = true;
            }
        }
        return in;
    };
    return set;
}

IndicatorSet random_ball_union(Dimension n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int dim = n.value();
    const int count = 2 + static_cast<int>(rng() % 3);
    std::vector<SignedBall> balls;
    while (static_cast<int>(balls.size()) < count) {
        SignedBall b;
        b.radius = 0.15 + 0.35 * unit(rng);
        const double reach = 1.5 - b.radius;
        b.center.assign(dim, 0.0);
        double c2;
        do {
            c2 = 0.0;
            for (double& x : b.center) {
                x = reach * (2.0 * unit(rng) - 1.0);
                c2 += x * x;
            }
        } while (c2 > reach * reach);
        bool ok = true;
        for (const auto& o : balls) {
            double s = 0.0;
            for (int k = 0; k < dim; ++k)
                s += (o.center[k] - b.center[k]) * (o.center[k] - b.center[k]);
            if (std::sqrt(s) <= o.radius + b.radius + 0.02)
                ok = false;
        }
        if (ok)
            balls.push_back(std::move(b));
    }
    return ball_oracle(n, std::move(balls));
}

}  // namespace isodiam
