#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"

#include "isodiam/experiments.hpp"
#include "isodiam/verify.hpp"

using namespace isodiam;

TEST_CASE("decay laws")
{
    CHECK(phi_n(Dimension(2), 0.04) == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(phi_n(Dimension(3), std::exp(-2.0)) == doctest::Approx(std::sqrt(2.0 * std::exp(-2.0))).epsilon(1e-15));
    CHECK(phi_n(Dimension(5), 1e-3) == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(phi_n(Dimension(3), 0.9) == doctest::Approx(std::sqrt(0.9)));
    CHECK_THROWS_AS(phi_n(Dimension(2), 0.0), std::domain_error);
    CHECK_THROWS_AS(phi_n(Dimension(4), -1.0), std::domain_error);

    for (int n = 2; n <= 8; ++n) {
        double previous = 0.0;
        for (int k = 0; k <= 400; ++k) {
            const double t = std::exp(-1.0 - 0.05 * k);
            const double phi = phi_n(Dimension(n), t);
            CHECK(phi <= 3.0 / std::exp(1.0) * std::pow(t, 1.0 / n));
            if (k > 0)
                CHECK(phi < previous);
            previous = phi;
        }
    }
}

TEST_CASE("family identifiers")
{
    const FamilySpec n2 = parse_family("n2");
    CHECK(n2.kind == FamilyKind::n2);
    CHECK(n2.n == 2);
    CHECK(parse_family("n2", 3).n == 3);
    CHECK(parse_family("high").n == 4);
    CHECK(parse_family("high:n=5", 6).n == 5);
    const FamilySpec h = parse_family("high:n=5,rho=0.02");
    CHECK(h.rho == 0.02);
    const FamilySpec n3 = parse_family("n3:c=0.2,theta=0.8");
    CHECK(n3.c == 0.2);
    CHECK(n3.theta == 0.8);
    const FamilySpec bm = parse_family("ballminus:r=0.25,x=0.5,n=4");
    CHECK(bm.n == 4);
    CHECK(bm.r == 0.25);
    CHECK(parse_family("reuleaux:k=5").k == 5);

    for (const char* text : {"n2", "high:n=5,rho=0.02", "n3:c=0.2,theta=0.8", "ballminus:r=0.25,x=0.5,n=4",
                             "reuleaux:k=7"}) {
        const FamilySpec f = parse_family(text);
        const FamilySpec again = parse_family(f.name());
        CHECK(again.name() == f.name());
    }

    CHECK_THROWS_AS(parse_family("sphere"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("n2:rho=0.1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("high:rho"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("high:rho=abc"), std::invalid_argument);
    CHECK_THROWS(parse_family("high:n=9"));
    CHECK_THROWS_AS(parse_family("reuleaux:n=3"), std::invalid_argument);
}

TEST_CASE("admissible eps ranges")
{
    CHECK_NOTHROW(family_pair(parse_family("n2"), 1.0 / 16.0));
    CHECK_THROWS_AS(family_pair(parse_family("n2"), 0.07), std::out_of_range);
    CHECK_THROWS_AS(family_pair(parse_family("high"), 0.45), std::out_of_range);
    CHECK_THROWS_AS(family_pair(parse_family("n3"), 0.2), std::out_of_range);
    CHECK_THROWS_AS(family_pair(parse_family("n3"), 1e-4), std::out_of_range);
    CHECK_THROWS_AS(family_pair(parse_family("ballminus"), 0.1), std::invalid_argument);
    CHECK(family_profile(parse_family("ballminus"), 0.0).n() == 2);
    CHECK_THROWS_AS(family_profile(parse_family("reuleaux"), 0.1), std::invalid_argument);
}

TEST_CASE("geometric grids")
{
    const auto g = geometric_grid(1.0 / 16.0, 1.0 / 1024.0, 5);
    REQUIRE(g.size() == 5);
    for (int i = 0; i < 5; ++i)
        CHECK(g[i] == doctest::Approx(std::pow(2.0, -4 - 1.5 * i)).epsilon(1e-14));
    CHECK(g.front() == 1.0 / 16.0);
    CHECK(g.back() == 1.0 / 1024.0);
    CHECK_THROWS_AS(geometric_grid(0.1, 0.2, 5), std::invalid_argument);
    CHECK_THROWS_AS(geometric_grid(0.1, 0.01, 1), std::invalid_argument);
}

TEST_CASE("log-log fits")
{
    std::vector<double> x, y;
    for (int i = 0; i < 7; ++i) {
        x.push_back(std::pow(2.0, -4 - i));
        y.push_back(3.0 * std::pow(x.back(), 2.5));
    }
    const LogLogFit exact = fit_loglog(x, y);
    CHECK(exact.slope == doctest::Approx(2.5).epsilon(1e-13));
    CHECK(exact.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    CHECK(exact.residual < 1e-12);
    CHECK_FALSE(exact.dropped_largest);
    CHECK(exact.points == 7);

    // a pre-asymptotic largest point is dropped, small noise elsewhere is kept
    std::vector<double> noisy = y;
    const double wiggle[7] = {0.0, 0.01, -0.01, 0.005, -0.005, 0.01, -0.01};
    for (int i = 0; i < 7; ++i)
        noisy[i] *= std::exp(wiggle[i]);
    noisy[0] *= 2.0;
    const LogLogFit dropped = fit_loglog(x, noisy);
    CHECK(dropped.dropped_largest);
    CHECK(dropped.points == 6);
    CHECK(dropped.slope == doctest::Approx(2.5).epsilon(0.01));
    const LogLogFit kept = fit_loglog(x, noisy, false);
    CHECK_FALSE(kept.dropped_largest);
    CHECK(kept.points == 7);

    // fewer than six points never drop
    const std::vector<double> x5(x.begin(), x.begin() + 5), y5(noisy.begin(), noisy.begin() + 5);
    CHECK_FALSE(fit_loglog(x5, y5).dropped_largest);

    CHECK_THROWS_AS(fit_loglog({1.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(fit_loglog({1.0, 2.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(fit_loglog({1.0, 2.0}, {1.0, 0.0}), std::domain_error);
}

TEST_CASE("decay experiment rows and CSV determinism")
{
    const FamilySpec f = parse_family("high:n=4,rho=0.01");
    const auto grid = geometric_grid(1.0 / 16.0, 1.0 / 256.0, 5);
    const DecayFit a = decay_experiment(f, grid, 7);
    const DecayFit b = decay_experiment(f, grid, 7, false);
    CHECK(decay_csv(a) == decay_csv(b));
    CHECK(a.rows.size() == 5);
    CHECK(a.ratio_series.size() == 3);
    for (const DecayRow& r : a.rows) {
        CHECK(r.diam == doctest::Approx(2.0).epsilon(1e-8));
        CHECK(r.delta > 0.0);
        CHECK(r.bound_margin >= -1e-8);
        CHECK(r.lemma_margin >= -1e-8);
        CHECK(r.perimeter_margin >= -1e-6);
        CHECK(r.thm_main_margin > 0.0);
    }
    const std::string csv = decay_csv(a);
    CHECK(csv.rfind("# family=high:n=4,rho=0.01\n# seed=7\n", 0) == 0);
    CHECK(csv.find("eps,diam,volume,delta,delta_prime_hull,r_out,r_in,symdiff_min,thm_main_margin,bound_margin,"
                   "lemma_margin,perimeter_margin") != std::string::npos);

    CHECK_THROWS_AS(decay_experiment(f, {0.05, 0.04, 0.03, 0.02}, 1), std::invalid_argument);
    CHECK_THROWS_AS(decay_experiment(f, {0.05, 0.04, 0.04, 0.02, 0.01}, 1), std::invalid_argument);
    CHECK_THROWS_AS(decay_experiment(parse_family("n2"), {0.5, 0.04, 0.03, 0.02, 0.01}, 1), std::out_of_range);
    CHECK_THROWS_AS(decay_experiment(parse_family("ballminus"), grid, 1), std::invalid_argument);
}

TEST_CASE("verification report is deterministic for a seed")
{
    VerifyOptions opt;
    opt.random_profiles = 3;
    opt.random_hulls = 4;
    opt.profile_hulls = 2;
    opt.cauchy_polytopes = 2;
    opt.cauchy_directions = 1000;
    opt.rearrange_sets = 2;
    opt.rearrange_grid = 64;
    opt.rearrange_samples = 2000;
    opt.probe_samples = 2000;
    const auto run = [&] {
        VerifyReport r;
        r.seed = opt.seed;
        r.checks.push_back(check_convex_bounds(opt));
        r.checks.push_back(check_cauchy(opt));
        r.checks.push_back(check_rearrangement(opt));
        r.checks.push_back(check_corrupted_profile());
        return report_json(r).dump();
    };
    CHECK(run() == run());
    const CheckResult corrupted = check_corrupted_profile();
    CHECK(corrupted.passed);
}
