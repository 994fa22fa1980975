#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"

#include "isodiam/constructions.hpp"
#include "isodiam/profile.hpp"
#include "isodiam/quadrature.hpp"

using namespace isodiam;

namespace {

SampledFunction sampled(double eps, int nodes, double (*fn)(double, double))
{
    SampledFunction f;
    f.x = uniform_grid(0.0, eps, nodes);
    f.y.resize(f.x.size());
    for (std::size_t k = 0; k < f.x.size(); ++k)
        f.y[k] = fn(f.x[k], eps);
    return f;
}

// closed form of the n = 2 notch, valid for eps <= 1/16
double n2_notch(double t, double eps)
{
    return t < 16.0 * eps * eps ? kPi * std::sqrt(t) : kPi * t / (8.0 * eps) + 2.0 * kPi * eps;
}

}  // namespace

TEST_CASE("envelope of a flat bump is pi sqrt(t)")
{
    const double eps = 0.05;
    const Envelope env = envelope_g(sampled(eps, 257, [](double, double) { return 0.0; }), eps);
    for (std::size_t k = 0; k < env.g.size(); ++k) {
        CHECK(env.g.y[k] == doctest::Approx(kPi * std::sqrt(env.g.x[k])).epsilon(1e-14));
        CHECK(env.argmax[k] == 0.0);
    }
}

TEST_CASE("envelope of a ramp down from rho is rho + pi sqrt(t)")
{
    const double rho = 0.01;
    const CapFunctionPair pair = family_high_n(Dimension(4), 1.0 / 16.0, rho);
    for (std::size_t k = 0; k < pair.g.size(); ++k)
        CHECK(pair.g.y[k] == doctest::Approx(rho + kPi * std::sqrt(pair.g.x[k])).epsilon(1e-13));
}

TEST_CASE("n = 2 family matches the closed-form notch")
{
    for (double eps : {1.0 / 16.0, 1.0 / 64.0, 1.0 / 1024.0}) {
        const CapFunctionPair pair = family_n2(Dimension(2), eps);
        CHECK(pair.f(eps) == doctest::Approx(kPi / 8.0));
        double worst = 0.0;
        double excess = 0.0;
        for (std::size_t k = 0; k < pair.g.size(); ++k) {
            const double t = pair.g.x[k];
            worst = std::max(worst, std::abs(pair.g.y[k] - n2_notch(t, eps)));
            excess = std::max(excess, pair.g.y[k] - pair.f.y[k]);
        }
        CHECK(worst < 1e-12);
        CHECK(excess <= 2.0 * kPi * eps + 1e-12);
    }
    CHECK_THROWS_AS(family_n2(Dimension(2), 0.07), std::invalid_argument);
    CHECK_THROWS_AS(family_n2(Dimension(2), 0.0), std::invalid_argument);
}

TEST_CASE("envelope is nondecreasing, dominates f and has its maximiser in [0, t]")
{
    const double eps = 0.1;
    const auto wavy = [](double t, double e) { return 0.3 * std::sin(40.0 * t / e) * std::sin(40.0 * t / e); };
    const SampledFunction f = sampled(eps, 513, wavy);
    const Envelope env = envelope_g(f, eps);
    for (std::size_t k = 0; k < env.g.size(); ++k) {
        CHECK(env.g.y[k] >= f.y[k]);
        CHECK(env.argmax[k] >= 0.0);
        CHECK(env.argmax[k] <= env.g.x[k]);
        if (k > 0)
            CHECK(env.g.y[k] >= env.g.y[k - 1]);
        // brute-force oracle over a fine s-grid never beats the exact envelope
        // breakpoints of f, uniform s and quadratic clustering at s = t
        double brute = 0.0;
        const double t = env.g.x[k];
        for (std::size_t j = 0; j <= k; ++j)
            brute = std::max(brute, f.y[j] + kPi * std::sqrt(t - f.x[j]));
        for (int j = 0; j <= 2000; ++j) {
            const double u = j / 2000.0;
            for (double s : {t * u, t * (1.0 - u * u)})
                brute = std::max(brute, f(s) + kPi * std::sqrt(std::max(0.0, t - s)));
        }
        CHECK(brute <= env.g.y[k] + 1e-12);
        CHECK(brute >= env.g.y[k] - 1e-6);
    }
}

TEST_CASE("envelope rejects grids that do not span [0, eps]")
{
    SampledFunction f{{0.0, 0.05}, {0.0, 0.0}};
    CHECK_THROWS_AS(envelope_g(f, 0.1), std::invalid_argument);
    f.x = {0.01, 0.1};
    CHECK_THROWS_AS(envelope_g(f, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(envelope_g(SampledFunction{}, 0.1), std::invalid_argument);
}

TEST_CASE("validate_pair rejects inadmissible pairs")
{
    CapFunctionPair pair = family_n2(Dimension(2), 1.0 / 32.0);
    CHECK_NOTHROW(validate_pair(pair));
    CapFunctionPair tall = pair;
    tall.f.y[3] = kPi / 8.0 + 0.01;
    CHECK_THROWS_AS(validate_pair(tall), std::invalid_argument);
    CapFunctionPair low = pair;
    low.g.y[5] = low.f.y[5] - 1e-3;
    CHECK_THROWS_AS(validate_pair(low), std::invalid_argument);
    CapFunctionPair wide = pair;
    wide.eps = 0.5;
    CHECK_THROWS_AS(validate_pair(wide), std::invalid_argument);
    CHECK_THROWS_AS(family_high_n(Dimension(4), 0.45, 0.01), std::invalid_argument);
    CHECK_THROWS_AS(family_high_n(Dimension(4), 0.1, 0.0), std::invalid_argument);
}

TEST_CASE("constructed sets have diameter 2")
{
    for (int n = 2; n <= 5; ++n) {
        for (double eps : {1.0 / 16.0, 1.0 / 128.0}) {
            CHECK(diameter(build_E(family_high_n(Dimension(n), eps, 0.01))) == doctest::Approx(2.0).epsilon(1e-8));
            CHECK(diameter(build_E(family_n2(Dimension(n), eps))) == doctest::Approx(2.0).epsilon(1e-8));
        }
    }
    for (double eps : {std::exp(-3.0), std::exp(-6.0)})
        CHECK(diameter(build_E(family_n3(Dimension(3), eps))) == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("profile of a construction follows the pair")
{
    const double eps = 1.0 / 16.0;
    const CapFunctionPair pair = family_n2(Dimension(2), eps);
    const RadialProfile e = build_E(pair);
    CHECK(e.r_max() == doctest::Approx(1.0 + eps));
    CHECK(e.angle_at(0.5) == doctest::Approx(kPi));
    CHECK(e.angle_at(1.0 - eps / 2.0) == doctest::Approx(kPi - pair.g(eps / 2.0)).epsilon(1e-12));
    CHECK(e.angle_at(1.0 + eps / 4.0) == doctest::Approx(pair.f(3.0 * eps / 4.0)).epsilon(1e-12));
}

TEST_CASE("deficits agree with an independent quadrature oracle")
{
    // scipy quad of the closed-form cap integrals, diameter exactly 2
    struct Row {
        int n;
        bool high;
        double eps;
        double delta;
    };
    const Row rows[] = {
        {2, false, 1.0 / 16.0, 1.249134834053e-02},  {2, false, 1.0 / 32.0, 3.459395233609e-03},
        {2, false, 1.0 / 64.0, 9.093280692702e-04},  {2, false, 1.0 / 1024.0, 3.723451188264e-06},
        {4, true, 1.0 / 16.0, 9.409516039668e-03},   {4, true, 1.0 / 128.0, 6.364068794107e-05},
        {5, true, 1.0 / 16.0, 6.362496775580e-03},   {5, true, 1.0 / 128.0, 1.671188252428e-05},
    };
    for (const Row& r : rows) {
        const CapFunctionPair pair =
            r.high ? family_high_n(Dimension(r.n), r.eps, 0.01) : family_n2(Dimension(r.n), r.eps);
        const double delta = isodiametric_deficit(build_E(pair));
        // the numerical diameter overshoots 2 by a few 1e-9
        CHECK(std::abs(delta - r.delta) < 2e-8);
    }
    CHECK(volume(build_E(family_n2(Dimension(2), 1.0 / 16.0))) == doctest::Approx(3.102834072349).epsilon(1e-8));
}

TEST_CASE("deficit upper bound dominates the deficit and vanishes without a bump")
{
    for (int n = 2; n <= 5; ++n) {
        for (double eps : {1.0 / 16.0, 1.0 / 64.0}) {
            const CapFunctionPair pair = family_high_n(Dimension(n), eps, 0.01);
            const RadialProfile e = build_E(pair);
            CHECK(deficit_upper_bound(pair, volume(e)) >= isodiametric_deficit(e) - 1e-8);
        }
    }
    // planar caps have measure 2 f, and the n = 2 bump is linear
    const double eps = 1.0 / 16.0;
    const CapFunctionPair line = family_n2(Dimension(2), eps);
    CHECK(bump_cap_integral(line, 0.0, eps) == doctest::Approx(kPi * eps / 8.0).epsilon(1e-13));
    CHECK(bump_cap_integral(line, 0.0, eps / 2.0) == doctest::Approx(kPi * eps / 32.0).epsilon(1e-13));
}

TEST_CASE("log-corrected family keeps the shifted bump under the unshifted notch")
{
    const double theta = kN3DefaultTheta;
    double previous_ratio = 0.0;
    for (int l = 3; l <= 7; ++l) {
        const double eps = std::exp(-l);
        const SampledFunction base = n3_base(eps, kN3DefaultC);
        const Envelope full = envelope_g(base, eps);
        const CapFunctionPair pair = family_n3(Dimension(3), eps);
        CHECK(pair.eps == doctest::Approx((1.0 - theta) * eps));
        REQUIRE(pair.params.has_value());
        CHECK(pair.params->l == doctest::Approx(l));
        for (std::size_t k = 0; k < pair.g.size(); ++k) {
            const double t = pair.g.x[k];
            CHECK(pair.f.y[k] == doctest::Approx(kN3DefaultC * std::pow((t + theta * eps) / eps, l)).epsilon(1e-12));
            // both sides are piecewise-linear samples of a concave notch on different grids
            CHECK(pair.g.y[k] <= full.g(t + theta * eps) + 1e-8);
        }
        // f / (g - f) on the upper part only reaches 1 for |log eps| near 18;
        // over computable eps it grows with |log eps|
        double ratio = 1e300;
        for (std::size_t k = 0; k < base.size(); ++k)
            if (base.x[k] >= theta * eps)
                ratio = std::min(ratio, base.y[k] / (full.g.y[k] - base.y[k]));
        CHECK(ratio > previous_ratio);
        CHECK(ratio < 1.0);
        previous_ratio = ratio;
    }
    CHECK_THROWS_AS(family_n3(Dimension(3), 0.2), std::invalid_argument);
    CHECK_THROWS_AS(family_n3(Dimension(3), 0.01, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(family_n3(Dimension(3), 0.01, kN3DefaultC, 0.5), std::invalid_argument);
}

TEST_CASE("outer radius of the high family against eps / 3")
{
    // holds for eps <= 1/16; at eps = 1/8 the notch swallows the far point
    const auto margin = [](double eps) {
        const RadialProfile e = build_E(family_high_n(Dimension(4), eps, 0.01));
        return r_out(e.scaled(2.0 / diameter(e))) - eps / 3.0;
    };
    CHECK(margin(1.0 / 16.0) > 0.0);
    CHECK(margin(1.0 / 64.0) > 0.0);
    CHECK(margin(1.0 / 8.0) < 0.0);
}

TEST_CASE("ball minus ball and helpers")
{
    CHECK_THROWS_AS(ball_minus_ball(Dimension(2), 0.0, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(ball_minus_ball(Dimension(2), 0.5, 0.6), std::invalid_argument);
    CHECK_THROWS_AS(ball_minus_ball(Dimension(2), 0.3, -0.1), std::invalid_argument);
    const RadialProfile centred = ball_minus_ball(Dimension(3), 0.3, 0.0);
    CHECK(centred.angle_at(0.2) == doctest::Approx(0.0));
    CHECK(centred.angle_at(0.5) == doctest::Approx(kPi));
    CHECK(volume(centred) == doctest::Approx(unit_ball_volume(3) * (1.0 - 0.027)).epsilon(1e-9));
    CHECK(volume(ball_profile(Dimension(3), 0.5)) == doctest::Approx(unit_ball_volume(3) * 0.125).epsilon(1e-12));
}

TEST_CASE("random profiles are reproducible by seed")
{
    const RadialProfile a = random_profile(Dimension(3), 17);
    const RadialProfile b = random_profile(Dimension(3), 17);
    const RadialProfile c = random_profile(Dimension(3), 18);
    CHECK(std::equal(a.angles().begin(), a.angles().end(), b.angles().begin(), b.angles().end()));
    CHECK_FALSE(std::equal(a.angles().begin(), a.angles().end(), c.angles().begin(), c.angles().end()));
}
