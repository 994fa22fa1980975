#include "isodiam/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "isodiam/constructions.hpp"
#include "isodiam/convex.hpp"
#include "isodiam/experiments.hpp"
#include "isodiam/json_io.hpp"
#include "isodiam/kernels.hpp"
#include "isodiam/rearrange.hpp"
#include "isodiam/reuleaux.hpp"

namespace isodiam {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

CheckResult finish(std::string name, double worst, std::size_t count, std::string detail)
{
    CheckResult r;
    r.name = std::move(name);
    r.worst_margin = worst;
    r.passed = worst >= 0.0 && std::isfinite(worst);
    r.count = count;
    r.detail = std::move(detail);
    return r;
}

struct FamilyMember {
    FamilySpec spec;
    double eps = 0.0;
    CapFunctionPair pair;
};

std::vector<FamilyMember> family_corpus()
{
    std::vector<FamilyMember> out;
    auto add = [&](const std::string& text, const std::vector<double>& grid) {
        const FamilySpec spec = parse_family(text);
        for (double e : grid)
            out.push_back({spec, e, family_pair(spec, e)});
    };
    add("n2", n2_eps_grid());
    add("high:n=4,rho=0.01", high_eps_grid());
    add("high:n=5,rho=0.01", high_eps_grid());
    add("n3", n3_eps_grid());
    return out;
}

template <class F>
void run_indexed(std::size_t count, bool parallel, const F& f)
{
    if (parallel)
        kernels::map_indices_parallel(count, f);
    else
        kernels::map_indices_serial(count, f);
}

double cap_closed_form(int n, double a)
{
    switch (n) {
    case 2:
        return 2.0 * a;
    case 3:
        return 2.0 * kPi * (1.0 - std::cos(a));
    case 4:
        return 2.0 * kPi * (a - std::sin(a) * std::cos(a));
    case 5: {
        const double c = std::cos(a);
        return 2.0 * kPi * kPi * (2.0 / 3.0 - c + c * c * c / 3.0);
    }
    default:
        return cap_area_quadrature(Dimension(n), CapAngle(a));
    }
}

/// Slope window check of a decay fit over (eps, delta) pairs.
double slope_margin(double slope, double lo, double hi) { return std::min(slope - lo, hi - slope); }

std::vector<double> powers(double base, int from, int to)
{
    std::vector<double> out;
    for (int k = from; k <= to; ++k)
        out.push_back(std::pow(base, -k));
    return out;
}

}  // namespace

std::vector<double> n2_eps_grid() { return powers(2.0, 4, 10); }
std::vector<double> high_eps_grid() { return powers(2.0, 4, 10); }
std::vector<double> n3_eps_grid()
{
    std::vector<double> out;
    for (int k = 3; k <= 7; ++k)
        out.push_back(std::exp(-static_cast<double>(k)));
    return out;
}

double main_theorem_margin(const RadialProfile& p)
{
    const RadialProfile q = p.scaled(2.0 / diameter(p));
    const double delta = isodiametric_deficit(q);
    const SymdiffMin sd = best_symdiff(q);
    const double ball = unit_ball_volume(q.n());
    return constant_C(q.dim()).C * std::sqrt(std::max(delta, 0.0)) - sd.value / (3.0 * ball);
}

CheckResult check_closed_forms()
{
    double worst_vol = 0.0, worst_cap = 0.0, worst_area_trip = 0.0, worst_angle_trip = 0.0;
    int worst_n = 0;
    double worst_alpha = 0.0;
    std::size_t bad_angles = 0;
    std::size_t count = 0;
    for (int n = 1; n <= kMaxDim; ++n) {
        const double exact = std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
        worst_vol = std::max(worst_vol, std::abs(unit_ball_volume(n) - exact));
        ++count;
    }
    constexpr int kGrid = 1000;
    for (int n = kMinDim; n <= kMaxDim; ++n) {
        const Dimension d(n);
        const double full = sphere_area(d);
        for (int i = 0; i < kGrid; ++i) {
            const double a = kPi * i / (kGrid - 1);
            const double area = cap_area(d, CapAngle(a));
            worst_cap = std::max(worst_cap, std::abs(area - cap_closed_form(n, a)));
            const double trip = std::abs(inverse_cap_area(d, area).value() - a);
            if (trip > 1e-10)
                ++bad_angles;
            if (trip > worst_angle_trip) {
                worst_angle_trip = trip;
                worst_n = n;
                worst_alpha = a;
            }
            const double target = full * i / (kGrid - 1);
            worst_area_trip = std::max(worst_area_trip, std::abs(cap_area(d, inverse_cap_area(d, target)) - target));
            count += 3;
        }
    }
    const double worst = std::max({worst_vol, worst_cap, worst_area_trip, worst_angle_trip});
    return finish("closed_forms", 1e-10 - worst, count,
                  "max errors (tol 1e-10): volume " + fmt(worst_vol) + ", cap " + fmt(worst_cap) +
                      ", area->angle->area " + fmt(worst_area_trip) + ", angle->area->angle " + fmt(worst_angle_trip) +
                      " at n=" + std::to_string(worst_n) + " alpha=" + fmt(worst_alpha) + " (" +
                      std::to_string(bad_angles) + " grid angles above tol)");
}

CheckResult check_ball_minus_ball()
{
    double worst = kInf;
    double e_delta = 0.0, e_rin = 0.0, e_rout = 0.0;
    std::size_t count = 0;
    for (int n = 2; n <= 4; ++n)
        for (double r : {0.1, 0.2, 0.3, 0.4, 0.5}) {
            const RadialProfile p = ball_minus_ball(Dimension(n), r, 0.5 * (1.0 - r));
            const RadialProfile q = p.scaled(2.0 / diameter(p));
            const double rn = std::pow(r, n);
            const double dd = std::abs(isodiametric_deficit(q) - rn / (1.0 - rn));
            const double di = std::abs(r_in(q) - r);
            const double dout = std::abs(r_out(q));
            e_delta = std::max(e_delta, dd);
            e_rin = std::max(e_rin, di);
            e_rout = std::max(e_rout, dout);
            worst = std::min({worst, 1e-6 - dd, 1e-4 - di, 1e-8 - dout});
            ++count;
        }
    return finish("ball_minus_ball", worst, count,
                  "max errors: delta " + fmt(e_delta) + " (tol 1e-6), r_in " + fmt(e_rin) + " (tol 1e-4), r_out " +
                      fmt(e_rout) + " (tol 1e-8)");
}

CheckResult check_construction_diameter()
{
    const auto corpus = family_corpus();
    std::vector<double> err(corpus.size());
    kernels::map_indices_serial(corpus.size(), [&](std::size_t i) {
        err[i] = std::abs(diameter(build_E(corpus[i].pair)) - 2.0);
    });
    const double e = *std::max_element(err.begin(), err.end());
    return finish("construction_diameter", 1e-5 - e, corpus.size(), "max |diam - 2| = " + fmt(e) + " (tol 1e-5)");
}

CheckResult check_deficit_bound()
{
    const auto corpus = family_corpus();
    double worst = kInf;
    for (const auto& m : corpus) {
        const RadialProfile p = build_E(m.pair);
        const double bound = deficit_upper_bound(m.pair, volume(p));
        worst = std::min(worst, bound + 1e-8 - isodiametric_deficit(p));
    }
    return finish("deficit_bound", worst, corpus.size(), "min (bound + 1e-8 - delta) = " + fmt(worst));
}

CheckResult check_rate_n2()
{
    const FamilySpec spec = parse_family("n2");
    const auto grid = n2_eps_grid();
    std::vector<double> deltas, ratio;
    double rout_margin = kInf;
    for (double e : grid) {
        const RadialProfile p = build_E(family_pair(spec, e));
        const RadialProfile q = p.scaled(2.0 / diameter(p));
        const double delta = isodiametric_deficit(q);
        const double ro = r_out(q);
        deltas.push_back(delta);
        ratio.push_back(ro / std::sqrt(delta));
        rout_margin = std::min(rout_margin, ro - (e / 3.0 - 1e-5));
    }
    const LogLogFit fit = fit_loglog(grid, deltas);
    const double spread = *std::max_element(ratio.begin(), ratio.end()) / *std::min_element(ratio.begin(), ratio.end());
    const double worst = std::min({slope_margin(fit.slope, 1.9, 2.1), rout_margin, 10.0 - spread});
    return finish("rate_n2", worst, grid.size(),
                  "slope " + fmt(fit.slope) + " in [1.9, 2.1]" + (fit.dropped_largest ? " (largest eps dropped)" : "") +
                      "; min r_out - (eps/3 - 1e-5) = " + fmt(rout_margin) + "; r_out/sqrt(delta) spread " +
                      fmt(spread) + " <= 10");
}

CheckResult check_rate_high()
{
    const auto grid = high_eps_grid();
    double worst = kInf;
    std::string detail;
    for (int n : {4, 5}) {
        const FamilySpec spec = parse_family("high:n=" + std::to_string(n) + ",rho=0.01");
        std::vector<double> deltas;
        for (double e : grid)
            deltas.push_back(isodiametric_deficit(build_E(family_pair(spec, e))));
        const LogLogFit fit = fit_loglog(grid, deltas);
        const double target = 0.5 * (n + 1);
        worst = std::min(worst, slope_margin(fit.slope, target - 0.1, target + 0.1));
        detail += (detail.empty() ? "" : "; ") + std::string("n=") + std::to_string(n) + " slope " + fmt(fit.slope) +
                  " in [" + fmt(target - 0.1) + ", " + fmt(target + 0.1) + "]" +
                  (fit.dropped_largest ? " (largest eps dropped)" : "");
    }
    return finish("rate_high_n", worst, 2 * grid.size(), detail);
}

CheckResult check_rate_n3()
{
    const FamilySpec spec = parse_family("n3");
    const auto grid = n3_eps_grid();
    std::vector<double> ratio;
    double lowest = kInf;
    for (double e : grid) {
        const double delta = isodiametric_deficit(build_E(family_pair(spec, e)));
        ratio.push_back(delta * std::abs(std::log(e)) / (e * e));
        lowest = std::min(lowest, ratio.back());
    }
    const double hi = *std::max_element(ratio.begin(), ratio.end());
    const double spread = lowest > 0.0 ? hi / lowest : kInf;
    std::string series;
    for (double x : ratio)
        series += (series.empty() ? "" : ", ") + fmt(x);
    return finish("rate_n3_log", lowest > 0.0 ? 3.0 - spread : -1.0, grid.size(),
                  "delta |log eps| / eps^2 = [" + series + "], max/min " + fmt(spread) + " <= 3");
}

CheckResult check_main_theorem(const VerifyOptions& opt)
{
    std::vector<RadialProfile> corpus;
    for (const auto& m : family_corpus())
        corpus.push_back(build_E(m.pair));
    const std::size_t families = corpus.size();
    for (int n = 2; n <= 4; ++n)
        for (int i = 0; i < opt.random_profiles; ++i)
            corpus.push_back(random_profile(Dimension(n), kernels::derive_seed(opt.seed, 1000000ULL * n + i)));
    std::vector<double> margin(corpus.size());
    run_indexed(corpus.size(), opt.parallel, [&](std::size_t i) { margin[i] = main_theorem_margin(corpus[i]) + 1e-8; });
    const double worst = *std::min_element(margin.begin(), margin.end());
    const double fam_worst = *std::min_element(margin.begin(), margin.begin() + static_cast<std::ptrdiff_t>(families));
    return finish("main_theorem_sign", worst, corpus.size(),
                  "min (C sqrt(delta) - symdiff/(3|B|) + 1e-8) = " + fmt(worst) + "; families only " + fmt(fam_worst));
}

CheckResult check_convex_bounds(const VerifyOptions& opt)
{
    // random hulls: perimeter bound and the lemma with E = F
    std::vector<double> per(static_cast<std::size_t>(opt.random_hulls)), lem(per.size());
    run_indexed(per.size(), opt.parallel, [&](std::size_t i) {
        const int n = 2 + static_cast<int>(i % 2);
        const Polytope f = random_hull(n, kernels::derive_seed(opt.seed, 2000000ULL + i));
        per[i] = check_perimeter_bound(f) + 1e-6;
        const double vol = body_volume(f);
        const double delta = std::pow(0.5 * body_diameter(f), n) * unit_ball_volume(n) / vol - 1.0;
        lem[i] = delta + 1e-8 - delta_prime(f);
    });
    double worst_hull = kInf;
    for (std::size_t i = 0; i < per.size(); ++i)
        worst_hull = std::min({worst_hull, per[i], lem[i]});

    std::vector<double> pper(static_cast<std::size_t>(opt.profile_hulls)), plem(pper.size());
    run_indexed(pper.size(), opt.parallel, [&](std::size_t i) {
        const int n = 2 + static_cast<int>(i % 5);
        const RadialProfile p = random_profile(Dimension(n), kernels::derive_seed(opt.seed, 3000000ULL + i));
        const RadialProfile q = p.scaled(2.0 / diameter(p));
        const Revolution hull = hull_of_profile(q);
        pper[i] = check_perimeter_bound(hull) + 1e-6;
        const DeficitLemma lemma = check_deficit_lemma(q);
        plem[i] = lemma.delta + 1e-8 - lemma.delta_prime_hull;
    });
    double worst_profile = kInf;
    for (std::size_t i = 0; i < pper.size(); ++i)
        worst_profile = std::min({worst_profile, pper[i], plem[i]});

    double worst_poly = kInf, worst_arc = kInf;
    for (int k : {3, 5, 7}) {
        const ReuleauxShape s = reuleaux(k, 2.0);
        const Polytope poly = reuleaux_polytope(s, 4096);
        worst_poly = std::min({worst_poly, 1e-4 - std::abs(perimeter(poly) - 2.0 * kPi), check_perimeter_bound(poly) + 1e-6});
        worst_arc = std::min(worst_arc, 1e-9 - std::abs(reuleaux_perimeter(s) - 2.0 * kPi));
    }
    const double worst = std::min({worst_hull, worst_profile, worst_poly, worst_arc});
    return finish("perimeter_bound_and_lemma", worst, per.size() + pper.size() + 6,
                  "random hulls " + fmt(worst_hull) + ", profile hulls " + fmt(worst_profile) +
                      ", reuleaux polygonized " + fmt(worst_poly) + ", reuleaux arcs " + fmt(worst_arc));
}

CheckResult check_cauchy(const VerifyOptions& opt)
{
    double worst_rel = kInf, worst_sigma = kInf;
    for (int i = 0; i < opt.cauchy_polytopes; ++i) {
        const int n = 2 + i % 2;
        const Polytope f = random_hull(n, kernels::derive_seed(opt.seed, 4000000ULL + i));
        const double direct = perimeter(f);
        const CauchyEstimate est =
            cauchy_perimeter(f, opt.cauchy_directions, kernels::derive_seed(opt.seed, 5000000ULL + i), opt.parallel);
        const double err = std::abs(est.value - direct);
        worst_rel = std::min(worst_rel, 0.01 - err / direct);
        worst_sigma = std::min(worst_sigma, 3.0 - err / est.stderr_);
    }
    return finish("cauchy_formula", std::min(worst_rel, worst_sigma / 3.0 * 0.01), opt.cauchy_polytopes,
                  "min (0.01 - rel err) = " + fmt(worst_rel) + ", min (3 - err/se) = " + fmt(worst_sigma));
}

CheckResult check_rearrangement(const VerifyOptions& opt)
{
    double worst_vol = kInf, worst_diam = kInf;
    for (int i = 0; i < opt.rearrange_sets; ++i) {
        const Dimension n(2 + i % 3);
        const IndicatorSet e = random_ball_union(n, kernels::derive_seed(opt.seed, 6000000ULL + i));
        const Rearrangement r = rearrange_sc(e, opt.rearrange_grid, opt.rearrange_samples,
                                             kernels::derive_seed(opt.seed, 7000000ULL + i), opt.parallel);
        const double vol = volume(r.profile);
        worst_vol = std::min(worst_vol, 3.0 - std::abs(vol - *e.known_volume) / r.volume_stderr);
        const double h = e.r_bound / opt.rearrange_grid;
        worst_diam = std::min(worst_diam, (*e.known_diameter + 2.0 * h - diameter(r.profile)) / h);
    }

    // a cap-symmetric set is its own rearrangement
    const RadialProfile p = random_profile(Dimension(3), kernels::derive_seed(opt.seed, 8000000ULL));
    IndicatorSet self;
    self.n = p.dim();
    self.r_bound = p.r_max() * (1.0 + 1e-9);
    self.contains = [&p](std::span<const double> q) { return p.contains(q); };
    const double full = sphere_area(p.dim());
    double worst_probe = kInf;
    for (int k = 0; k < 32; ++k) {
        const double rad = p.r_max() * (k + 0.5) / 32.0;
        const SliceEstimate s =
            slice_angle(self, rad, opt.probe_samples, kernels::derive_seed(opt.seed, 9000000ULL + k));
        const double truth = cap_area(p.dim(), CapAngle::clamped(p.angle_at(rad))) / full;
        const double sigma = std::sqrt(truth * (1.0 - truth) / opt.probe_samples);
        const double err = std::abs(s.fraction - truth);
        worst_probe = std::min(worst_probe, sigma > 0.0 ? 3.0 - err / sigma : (err == 0.0 ? 3.0 : -kInf));
    }
    return finish("rearrangement", std::min({worst_vol, worst_diam, worst_probe}),
                  static_cast<std::size_t>(opt.rearrange_sets) + 32,
                  "min (3 - |dV|/sigma) = " + fmt(worst_vol) + ", min (diam slack)/h = " + fmt(worst_diam) +
                      ", min (3 - probe err/sigma) = " + fmt(worst_probe));
}

CheckResult check_psi_bound()
{
    double worst = kInf;
    std::size_t count = 0;
    for (double eps : {0.1, 0.2, 0.4})
        for (int i = 0; i < 100; ++i)
            for (int j = 0; j < 100; ++j) {
                const double s = eps * i / 99.0;
                const double t = eps * j / 99.0;
                if (s > t)
                    continue;
                worst = std::min(worst, kPi * std::sqrt(t - s) + 1e-12 - psi(s, t, eps).value());
                ++count;
            }
    return finish("psi_bound", worst, count, "min (pi sqrt(t - s) + 1e-12 - psi) = " + fmt(worst));
}

CheckResult check_corrupted_profile()
{
    const RadialProfile ball = ball_profile(Dimension(3));
    nlohmann::json j = profile_to_json(ball);
    j["angles"][10] = 4.0;
    try {
        profile_from_json(j);
    } catch (const std::invalid_argument& e) {
        return finish("corrupted_profile_rejected", 0.0, 1, std::string("rejected: ") + e.what());
    }
    return finish("corrupted_profile_rejected", -1.0, 1, "profile with angle 4 > pi was accepted");
}

bool VerifyReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CheckResult check_decay_fits(const VerifyOptions& opt)
{
    const std::pair<const char*, std::vector<double>> runs[] = {
        {"n2", n2_eps_grid()}, {"high:n=4,rho=0.01", high_eps_grid()}, {"high:n=5,rho=0.01", high_eps_grid()},
        {"n3", n3_eps_grid()}};
    double worst = kInf;
    std::size_t count = 0;
    std::string detail;
    for (const auto& [family, grid] : runs) {
        const DecayFit fit = decay_experiment(parse_family(family), grid, opt.seed, opt.parallel);
        double band = 1.0;
        for (const auto& [name, series] : fit.ratio_series) {
            const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
            band = std::max(band, *lo > 0.0 ? *hi / *lo : kInf);
        }
        worst = std::min({worst, 0.05 - fit.fit.residual, 20.0 - band});
        count += grid.size();
        detail += (detail.empty() ? "" : "; ") + std::string(family) + " residual " + fmt(fit.fit.residual) +
                  " widest ratio band " + fmt(band);
    }
    return finish("decay_fit_quality", worst, count, detail + " (limits 0.05, 20)");
}

VerifyReport verify_suite(const VerifyOptions& opt)
{
    VerifyReport r;
    r.seed = opt.seed;
    r.checks.push_back(check_closed_forms());
    r.checks.push_back(check_ball_minus_ball());
    r.checks.push_back(check_construction_diameter());
    r.checks.push_back(check_deficit_bound());
    r.checks.push_back(check_rate_n2());
    r.checks.push_back(check_rate_high());
    r.checks.push_back(check_rate_n3());
    r.checks.push_back(check_main_theorem(opt));
    r.checks.push_back(check_convex_bounds(opt));
    r.checks.push_back(check_cauchy(opt));
    r.checks.push_back(check_rearrangement(opt));
    r.checks.push_back(check_psi_bound());
    r.checks.push_back(check_corrupted_profile());
    r.checks.push_back(check_decay_fits(opt));
    return r;
}

nlohmann::json report_json(const VerifyReport& r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"worst_margin", c.worst_margin},
                          {"count", c.count},
                          {"detail", c.detail}});
    return {{"seed", r.seed}, {"all_passed", r.all_passed()}, {"checks", checks}};
}

}  // namespace isodiam
