#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "isodiam/constructions.hpp"
#include "isodiam/profile.hpp"
#include "isodiam/quadrature.hpp"

using namespace isodiam;

namespace {

RadialProfile constant_profile(int n, double angle)
{
    return RadialProfile(Dimension(n), uniform_grid(0.0, 1.0, 65), std::vector<double>(65, angle));
}

// independent membership estimate of the volume in the box [-R, R]^n
std::pair<double, double> mc_volume(const RadialProfile& p, int samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const double R = p.r_max();
    std::uniform_real_distribution<double> u(-R, R);
    std::vector<double> q(p.n());
    int hits = 0;
    for (int s = 0; s < samples; ++s) {
        for (double& x : q)
            x = u(rng);
        hits += p.contains(q) ? 1 : 0;
    }
    const double box = std::pow(2.0 * R, p.n());
    const double frac = static_cast<double>(hits) / samples;
    return {box * frac, box * std::sqrt(frac * (1.0 - frac) / samples)};
}

}  // namespace

TEST_CASE("profile validation")
{
    CHECK_THROWS_AS(RadialProfile(Dimension(2), uniform_grid(0.0, 1.0, 10), std::vector<double>(10, 1.0)),
                    std::invalid_argument);
    auto r = uniform_grid(0.0, 1.0, 65);
    std::vector<double> v(65, 1.0);
    v[3] = 3.5;
    CHECK_THROWS_AS(RadialProfile(Dimension(2), r, v), std::invalid_argument);
    v[3] = std::nan("");
    CHECK_THROWS_AS(RadialProfile(Dimension(2), r, v), std::invalid_argument);
    v[3] = 1.0;
    r[0] = 0.1;
    CHECK_THROWS_AS(RadialProfile(Dimension(2), r, v), std::invalid_argument);
    r[0] = 0.0;
    std::swap(r[5], r[6]);
    CHECK_THROWS_AS(RadialProfile(Dimension(2), r, v), std::invalid_argument);
}

TEST_CASE("profile builder joins jumps with strictly increasing radii")
{
    ProfileBuilder b(Dimension(2));
    b.segment(0.0, 0.5, 40, ProfileBuilder::Spacing::uniform, [](double) { return kPi; });
    b.segment(0.5, 1.0, 40, ProfileBuilder::Spacing::cosine, [](double) { return 1.0; });
    const RadialProfile p = std::move(b).build();
    for (std::size_t i = 1; i < p.size(); ++i)
        CHECK(p.radii()[i] > p.radii()[i - 1]);
    CHECK(p.angle_at(0.25) == kPi);
    CHECK(p.angle_at(0.75) == doctest::Approx(1.0));
    CHECK(p.angle_at(2.0) == 0.0);
}

TEST_CASE("volume examples")
{
    for (int n = 2; n <= 8; ++n)
        CHECK(volume(ball_profile(Dimension(n))) == doctest::Approx(unit_ball_volume(n)).epsilon(1e-13));
    CHECK(volume(constant_profile(3, kPi / 2)) == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-13));
    CHECK(volume(ball_minus_ball(Dimension(2), 0.3, 0.5)) == doctest::Approx(kPi * (1.0 - 0.09)).epsilon(1e-6));  // second order in the grid
}

TEST_CASE("volume agrees with membership sampling on random profiles")
{
    for (int k = 0; k < 20; ++k) {
        const RadialProfile p = random_profile(Dimension(2 + k % 3), 100 + k);
        const auto [est, se] = mc_volume(p, 200000, 500 + k);
        CHECK(std::abs(volume(p) - est) <= 3.0 * se);
    }
}

TEST_CASE("diameter examples")
{
    CHECK(diameter(ball_profile(Dimension(3))) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(diameter(constant_profile(3, kPi / 2)) == doctest::Approx(2.0).epsilon(1e-14));
    const auto p = build_E(family_n2(Dimension(2), 1.0 / 32.0));
    CHECK(std::abs(diameter(p) - 2.0) < 1e-6);
    // circular sector of half-angle v: rim to rim is 2 sin v > 1 for v = 1.2
    CHECK(diameter(constant_profile(2, 1.2)) == doctest::Approx(2.0 * std::sin(1.2)).epsilon(1e-12));
    // a narrow sector is longest from apex to rim
    CHECK(diameter(constant_profile(2, 0.3)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("isodiametric deficit examples")
{
    CHECK(std::abs(isodiametric_deficit(ball_profile(Dimension(3)))) < 1e-13);
    CHECK(std::abs(isodiametric_deficit(ball_profile(Dimension(4), 0.37))) < 1e-13);
    CHECK(isodiametric_deficit(ball_minus_ball(Dimension(2), 0.5, 0.4)) == doctest::Approx(1.0 / 3.0).epsilon(1e-7));
    CHECK(isodiametric_deficit(ball_minus_ball(Dimension(3), 0.2, 0.3)) ==
          doctest::Approx(0.008 / 0.992).epsilon(1e-6));
    const RadialProfile empty(Dimension(2), uniform_grid(0.0, 1.0, 65), std::vector<double>(65, 0.0));
    CHECK_THROWS_AS(isodiametric_deficit(empty), std::domain_error);
}

TEST_CASE("deficit is nonnegative and scale invariant")
{
    for (int k = 0; k < 30; ++k) {
        const RadialProfile p = random_profile(Dimension(2 + k % 4), 900 + k);
        const double d = isodiametric_deficit(p);
        CHECK(d >= -1e-9);
        for (double lam : {0.1, 1.0, 7.3})
            CHECK(std::abs(isodiametric_deficit(p.scaled(lam)) - d) < 1e-10 * std::max(1.0, d));
    }
}

TEST_CASE("symmetric difference with axis balls")
{
    CHECK(symdiff_axis_ball(ball_profile(Dimension(2)), 0.0) == doctest::Approx(0.0).epsilon(1e-12));
    // two unit disks at distance 1: 2 (pi - lens), lens = 2 acos(1/2) - sqrt(3)/2
    CHECK(symdiff_axis_ball(ball_profile(Dimension(2)), 1.0) == doctest::Approx(3.826445909962073).epsilon(1e-9));
    CHECK(symdiff_axis_ball(ball_profile(Dimension(2)), -1.0) == doctest::Approx(3.826445909962073).epsilon(1e-9));
    // unit balls in space at distance 1: lens 5 pi / 12
    CHECK(symdiff_axis_ball(ball_profile(Dimension(3)), 1.0) == doctest::Approx(11.0 * kPi / 6.0).epsilon(1e-9));
    for (int n = 2; n <= 4; ++n) {
        const RadialProfile p = ball_minus_ball(Dimension(n), 0.3, 0.35);
        CHECK(symdiff_axis_ball(p, 0.0) == doctest::Approx(unit_ball_volume(n) * std::pow(0.3, n)).epsilon(5e-6));
    }
}

TEST_CASE("best symmetric difference")
{
    const SymdiffMin b = best_symdiff(ball_profile(Dimension(3)));
    CHECK(std::abs(b.t) < 1e-6);
    CHECK(b.value < 1e-5);
    // the hole sits inside B(t e) for small |t|, so the lens corner at t = 0 wins
    const RadialProfile p = ball_minus_ball(Dimension(2), 0.5, 0.4);
    const SymdiffMin m = best_symdiff(p);
    CHECK(std::abs(m.t) < 1e-6);
    CHECK(symdiff_axis_ball(p, 0.05) > m.value);
    CHECK(symdiff_axis_ball(p, -0.05) > m.value);
}

TEST_CASE("outer and inner radii")
{
    CHECK(r_out(ball_profile(Dimension(3))) < 1e-12);
    CHECK(r_in(ball_profile(Dimension(3))) < 1e-6);
    for (double r : {0.1, 0.3}) {
        const RadialProfile p = ball_minus_ball(Dimension(3), r, 0.5 * (1.0 - r));
        CHECK(r_out(p) < 1e-12);
        CHECK(std::abs(r_in(p) - r) < 1e-4);
    }
    const double eps = 1.0 / 16.0;
    const RadialProfile e = build_E(family_n2(Dimension(2), eps));
    CHECK(r_out(e.scaled(2.0 / diameter(e))) >= eps / 3.0 - 1e-5);
}

TEST_CASE("distance to the set in the meridian plane")
{
    const RadialProfile b = ball_profile(Dimension(3));
    CHECK(distance_to_set(b, 2.0, 0.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(distance_to_set(b, 0.0, -3.0) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(distance_to_set(b, 0.3, 0.2) == 0.0);
}

TEST_CASE("deficit report")
{
    const DeficitReport b = report(ball_profile(Dimension(2)));
    CHECK(b.diameter == doctest::Approx(2.0));
    CHECK(std::abs(b.delta) < 1e-12);
    CHECK(b.r_out < 1e-9);
    CHECK(b.r_in < 1e-6);
    CHECK(b.symdiff_min < 1e-5);
    CHECK(b.thm_main_margin > -1e-8);
    CHECK(b.hausdorff_hi == doctest::Approx(2.0 * b.hausdorff_lo));

    const DeficitReport h = report(ball_minus_ball(Dimension(2), 0.5, 0.4));
    CHECK(h.delta == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
    CHECK(h.r_in == doctest::Approx(0.5).epsilon(1e-4));
    CHECK(h.thm_main_margin >= 0.0);
    CHECK(h.r_out <= 0.5 * h.diameter);
    CHECK(h.r_in <= 1.0);
}

TEST_CASE("main inequality margin on random profiles")
{
    for (int k = 0; k < 15; ++k) {
        const RadialProfile p = random_profile(Dimension(2 + k % 3), 4000 + k);
        const DeficitReport r = report(p);
        CHECK(r.thm_main_margin >= -1e-8);
        CHECK(r.delta >= -1e-9);
    }
}
