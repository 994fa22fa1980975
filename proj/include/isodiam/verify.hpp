#pragma once

// Seeded verification corpora.  Each check returns pass/fail with its worst
// margin; a margin >= 0 means every item met its tolerance.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "isodiam/profile.hpp"

namespace isodiam {

struct CheckResult {
    std::string name;
    bool passed = false;
    double worst_margin = 0.0;
    std::size_t count = 0;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 20240601;
    int random_profiles = 1000;    ///< per n in {2, 3, 4}
    int random_hulls = 1000;       ///< split over n = 2, 3
    int profile_hulls = 200;       ///< spread over n = 2..6
    int cauchy_polytopes = 20;
    int cauchy_directions = 100000;
    int rearrange_sets = 50;
    int rearrange_grid = 256;
    int rearrange_samples = 20000;
    int probe_samples = 20000;
    bool parallel = true;
};

/// eps grids used by the rate checks and the construction corpus.
std::vector<double> n2_eps_grid();     ///< 2^-4 .. 2^-10
std::vector<double> high_eps_grid();   ///< 2^-4 .. 2^-10
std::vector<double> n3_eps_grid();     ///< e^-3 .. e^-7

/// C(n) sqrt(delta) - symdiff_min / (3 |B|) after rescaling to diameter 2.
double main_theorem_margin(const RadialProfile& p);

CheckResult check_closed_forms();
CheckResult check_ball_minus_ball();
CheckResult check_construction_diameter();
CheckResult check_deficit_bound();
CheckResult check_rate_n2();
CheckResult check_rate_high();
CheckResult check_rate_n3();
CheckResult check_main_theorem(const VerifyOptions& opt);
CheckResult check_convex_bounds(const VerifyOptions& opt);
CheckResult check_cauchy(const VerifyOptions& opt);
CheckResult check_rearrangement(const VerifyOptions& opt);
CheckResult check_psi_bound();
/// A profile with an angle above pi must be rejected by validation.
CheckResult check_corrupted_profile();
/// Log-log residual <= 0.05 and every ratio series within a factor 20 band,
/// for the n2, high (n = 4, 5) and n3 decay experiments.
CheckResult check_decay_fits(const VerifyOptions& opt);

struct VerifyReport {
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

VerifyReport verify_suite(const VerifyOptions& opt);

/// Deterministic JSON (no timings) of the report.
nlohmann::json report_json(const VerifyReport& r);

}  // namespace isodiam
