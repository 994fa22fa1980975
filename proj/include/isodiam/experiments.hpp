#pragma once

// Decay-rate experiments over the near-optimal families and their CSV form.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isodiam/constructions.hpp"
#include "isodiam/profile.hpp"

namespace isodiam {

/// sqrt(delta) for n = 2, sqrt(delta max(|log delta|, 1)) for n = 3,
/// delta^{2/(n+1)} for n >= 4.  Throws std::domain_error for delta <= 0.
double phi_n(Dimension n, double delta);

enum class FamilyKind { n2, high, n3, ballminus, reuleaux };

/// Parsed family identifier, e.g. "n2", "high:n=4,rho=0.01",
/// "n3:c=0.2,theta=0.7", "ballminus:r=0.3,x=0.35", "reuleaux:k=5".
struct FamilySpec {
    FamilyKind kind = FamilyKind::n2;
    int n = 2;
    double rho = 0.01;
    double c = kN3DefaultC;
    double theta = kN3DefaultTheta;
    double r = 0.3;
    double x = 0.35;
    int k = 3;

    std::string name() const;  ///< canonical identifier, round-trips through parse_family
};

/// Throws std::invalid_argument for unknown families or keys.  `n_override`
/// replaces the family's default dimension unless the text sets n itself.
FamilySpec parse_family(const std::string& text, std::optional<int> n_override = std::nullopt);

/// Admissible eps range (lo, hi] of a family with a bump parameter.
std::pair<double, double> eps_range(const FamilySpec& f);

/// Cap-function pair of the family at eps.  Throws std::out_of_range when
/// eps lies outside eps_range and std::invalid_argument for families
/// without one.
CapFunctionPair family_pair(const FamilySpec& f, double eps);

/// Profile of the family member: build_E of the pair, or B minus B_r(x).
RadialProfile family_profile(const FamilySpec& f, double eps);

/// `steps` geometric values from eps_max down to eps_min.
std::vector<double> geometric_grid(double eps_max, double eps_min, int steps);

struct LogLogFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  ///< root mean square of the log residuals
    bool dropped_largest = false;
    std::size_t points = 0;
};

/// OLS of log y on log x.  With `allow_drop`, the largest x is dropped and
/// the fit redone when its residual exceeds twice the median residual.
LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y, bool allow_drop = true);

struct DecayRow {
    double eps = 0.0;
    double diam = 0.0;
    double volume = 0.0;
    double delta = 0.0;
    double delta_prime_hull = 0.0;
    double r_out = 0.0;
    double r_in = 0.0;
    double symdiff_min = 0.0;
    double thm_main_margin = 0.0;   ///< C sqrt(delta) - symdiff_min / (3 |B|)
    double bound_margin = 0.0;      ///< deficit_upper_bound - delta
    double lemma_margin = 0.0;      ///< delta - delta_prime_hull
    double perimeter_margin = 0.0;  ///< P(B) - P(hull)
};

struct DecayFit {
    FamilySpec family;
    std::uint64_t seed = 0;
    std::vector<double> eps_grid;  ///< strictly decreasing
    std::vector<double> deltas;
    LogLogFit fit;
    std::map<std::string, std::vector<double>> ratio_series;
    std::vector<DecayRow> rows;
};

/// Builds every family member on the grid, measures it and fits the decay of
/// delta in eps.  Needs at least 5 strictly decreasing admissible eps values.
/// The computation is deterministic; `seed` is recorded for the report.
DecayFit decay_experiment(const FamilySpec& f, std::vector<double> eps_list, std::uint64_t seed,
                          bool parallel = true);

/// CSV with a comment header carrying the fit; numbers printed with %.17g.
std::string decay_csv(const DecayFit& fit);

}  // namespace isodiam
