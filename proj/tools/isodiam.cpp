// Command-line front end: deficit reports, constructions, decay experiments,
// rearrangements, the verification suite and Reuleaux polygons.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "isodiam/constructions.hpp"
#include "isodiam/convex.hpp"
#include "isodiam/experiments.hpp"
#include "isodiam/json_io.hpp"
#include "isodiam/kernels.hpp"
#include "isodiam/profile.hpp"
#include "isodiam/rearrange.hpp"
#include "isodiam/reuleaux.hpp"
#include "isodiam/verify.hpp"

namespace {

using nlohmann::json;
using namespace isodiam;

void emit(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

json profile_summary(const RadialProfile& p, double tol)
{
    const DeficitReport rep = report(p);
    json j = deficit_report_json(rep);
    j["n"] = p.n();
    j["raw_diameter"] = diameter(p);
    j["raw_diameter_is_2"] = std::abs(j["raw_diameter"].get<double>() - 2.0) <= tol;
    const DeficitLemma lemma = check_deficit_lemma(p.scaled(rep.scale));
    j["delta_prime_hull"] = lemma.delta_prime_hull;
    return j;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Numerical checks of quantitative isodiametric stability"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<int> n_flag;
    double tol = 1e-5;
    int threads = 0;
    app.add_option("--n", n_flag, "ambient dimension (2..8), overrides the family default");
    app.add_option("--tol", tol, "tolerance used for pass/fail flags in the output")->check(CLI::PositiveNumber);
    app.add_option("--threads", threads, "OpenMP threads, 0 keeps the runtime default")->check(CLI::NonNegativeNumber);

    auto* deficit = app.add_subcommand("deficit", "deficit report of a profile set given as JSON");
    std::string profile_path;
    deficit->add_option("profile", profile_path, "profile JSON file")->required();

    auto* construct = app.add_subcommand("construct", "build a family member and print its profile");
    std::string family;
    double eps = 1.0 / 16.0;
    std::string construct_out;
    construct->add_option("family", family, "family identifier, e.g. n2, high:rho=0.01, n3, ballminus:r=0.3,x=0.35")
        ->required();
    construct->add_option("--eps", eps, "bump width");
    construct->add_option("--out", construct_out, "profile JSON output (default: stdout summary only)");

    auto* decay = app.add_subcommand("decay", "decay-rate experiment over a geometric eps grid");
    double eps_min = std::pow(2.0, -10), eps_max = std::pow(2.0, -4);
    int steps = 7;
    std::uint64_t seed = 1;
    std::string decay_out;
    decay->add_option("family", family, "family identifier")->required();
    decay->add_option("--eps-min", eps_min, "smallest eps");
    decay->add_option("--eps-max", eps_max, "largest eps");
    decay->add_option("--steps", steps, "grid size (>= 5)");
    decay->add_option("--seed", seed, "recorded seed");
    decay->add_option("--out", decay_out, "CSV output (default: stdout)");

    auto* rearr = app.add_subcommand("rearrange", "spherical-cap rearrangement of a ball oracle");
    std::string oracle_path;
    int grid = 256, samples = 20000;
    std::string rearr_out;
    rearr->add_option("oracle", oracle_path, "oracle JSON file")->required();
    rearr->add_option("--grid", grid, "radial grid size");
    rearr->add_option("--samples", samples, "Monte Carlo samples per radius");
    rearr->add_option("--seed", seed, "Monte Carlo seed");
    rearr->add_option("--out", rearr_out, "profile JSON output of the rearranged set");

    auto* verify = app.add_subcommand("verify", "run the seeded verification suite");
    std::string verify_out;
    bool quick = false;
    VerifyOptions vopt;
    verify->add_option("--seed", vopt.seed, "corpus seed");
    verify->add_option("--out", verify_out, "JSON report output (default: stdout)");
    verify->add_flag("--quick", quick, "shrink the random corpora tenfold");

    auto* reul = app.add_subcommand("reuleaux", "perimeter of a regular Reuleaux polygon");
    int k = 3;
    double d = 2.0;
    int arc_samples = 4096;
    reul->add_option("--k", k, "odd number of vertices");
    reul->add_option("--d", d, "width");
    reul->add_option("--samples", arc_samples, "boundary samples of the polygonal approximation");

    CLI11_PARSE(app, argc, argv);

    try {
        kernels::set_threads(threads);
        if (deficit->parsed()) {
            const RadialProfile p = profile_from_json(read_json_file(profile_path));
            std::cout << profile_summary(p, tol).dump(2) << "\n";
        } else if (construct->parsed()) {
            const FamilySpec spec = parse_family(family, n_flag);
            const RadialProfile p = family_profile(spec, eps);
            json j = profile_summary(p, tol);
            j["family"] = spec.name();
            j["eps"] = eps;
            if (spec.kind != FamilyKind::ballminus) {
                const CapFunctionPair pair = family_pair(spec, eps);
                j["deficit_upper_bound"] = deficit_upper_bound(pair, volume(p));
            }
            std::cout << j.dump(2) << "\n";
            if (!construct_out.empty())
                emit(profile_to_json(p).dump() + "\n", construct_out);
        } else if (decay->parsed()) {
            const FamilySpec spec = parse_family(family, n_flag);
            const DecayFit fit = decay_experiment(spec, geometric_grid(eps_max, eps_min, steps), seed);
            emit(decay_csv(fit), decay_out);
        } else if (rearr->parsed()) {
            const IndicatorSet e = oracle_from_json(read_json_file(oracle_path));
            const Rearrangement r = rearrange_sc(e, grid, samples, seed);
            json j{{"n", e.n.value()},
                   {"volume", volume(r.profile)},
                   {"volume_stderr", r.volume_stderr},
                   {"diameter", diameter(r.profile)},
                   {"grid_step", e.r_bound / grid}};
            if (e.known_volume)
                j["known_volume"] = *e.known_volume;
            if (e.known_diameter)
                j["known_diameter"] = *e.known_diameter;
            std::cout << j.dump(2) << "\n";
            if (!rearr_out.empty())
                emit(profile_to_json(r.profile).dump() + "\n", rearr_out);
        } else if (verify->parsed()) {
            if (quick) {
                vopt.random_profiles /= 10;
                vopt.random_hulls /= 10;
                vopt.profile_hulls /= 10;
                vopt.rearrange_sets /= 10;
            }
            const VerifyReport r = verify_suite(vopt);
            emit(report_json(r).dump(2) + "\n", verify_out);
            for (const auto& c : r.checks)
                std::cerr << (c.passed ? "pass " : "FAIL ") << c.name << ": " << c.detail << "\n";
            return r.all_passed() ? 0 : 1;
        } else if (reul->parsed()) {
            const ReuleauxShape s = reuleaux(k, d);
            const Polytope poly = reuleaux_polytope(s, arc_samples);
            const double exact = reuleaux_perimeter(s);
            const double approx = perimeter(poly);
            json j{{"k", k},
                   {"d", d},
                   {"perimeter_arcs", exact},
                   {"perimeter_polygon", approx},
                   {"pi_d", kPi * d},
                   {"arcs_match_pi_d", std::abs(exact - kPi * d) <= tol},
                   {"perimeter_margin_diameter_2", check_perimeter_bound(poly)}};
            std::cout << j.dump(2) << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
