#include "isodiam/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "isodiam/convex.hpp"
#include "isodiam/kernels.hpp"

namespace isodiam {

namespace {

std::string fmt(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_number(const std::string& key, const std::string& value)
{
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size() || value.empty())
        throw std::invalid_argument("family parameter " + key + " is not a number: '" + value + "'");
    return x;
}

}  // namespace

double phi_n(Dimension n, double delta)
{
    if (!(delta > 0.0))
        throw std::domain_error("phi_n: delta must be positive");
    const int d = n.value();
    if (d == 2)
        return std::sqrt(delta);
    if (d == 3)
        return std::sqrt(delta * std::max(std::abs(std::log(delta)), 1.0));
    return std::pow(delta, 2.0 / (d + 1));
}

std::string FamilySpec::name() const
{
    switch (kind) {
    case FamilyKind::n2:
        return "n2:n=" + std::to_string(n);
    case FamilyKind::high:
        return "high:n=" + std::to_string(n) + ",rho=" + fmt(rho);
    case FamilyKind::n3:
        return "n3:n=" + std::to_string(n) + ",c=" + fmt(c) + ",theta=" + fmt(theta);
    case FamilyKind::ballminus:
        return "ballminus:n=" + std::to_string(n) + ",r=" + fmt(r) + ",x=" + fmt(x);
    case FamilyKind::reuleaux:
        return "reuleaux:k=" + std::to_string(k);
    }
    return {};
}

FamilySpec parse_family(const std::string& text, std::optional<int> n_override)
{
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    FamilySpec f;
    if (head == "n2") {
        f.kind = FamilyKind::n2;
        f.n = 2;
    } else if (head == "high") {
        f.kind = FamilyKind::high;
        f.n = 4;
    } else if (head == "n3") {
        f.kind = FamilyKind::n3;
        f.n = 3;
    } else if (head == "ballminus") {
        f.kind = FamilyKind::ballminus;
        f.n = 2;
    } else if (head == "reuleaux") {
        f.kind = FamilyKind::reuleaux;
        f.n = 2;
    } else {
        throw std::invalid_argument("unknown family '" + head + "'");
    }
    if (n_override)
        f.n = *n_override;

    if (colon != std::string::npos) {
        std::stringstream rest(text.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("family parameter without value: '" + item + "'");
            const std::string key = item.substr(0, eq);
            const double val = parse_number(key, item.substr(eq + 1));
            if (key == "n")
                f.n = static_cast<int>(val);
            else if (key == "rho" && f.kind == FamilyKind::high)
                f.rho = val;
            else if (key == "c" && f.kind == FamilyKind::n3)
                f.c = val;
            else if (key == "theta" && f.kind == FamilyKind::n3)
                f.theta = val;
            else if (key == "r" && f.kind == FamilyKind::ballminus)
                f.r = val;
            else if (key == "x" && f.kind == FamilyKind::ballminus)
                f.x = val;
            else if (key == "k" && f.kind == FamilyKind::reuleaux)
                f.k = static_cast<int>(val);
            else
                throw std::invalid_argument("parameter '" + key + "' does not apply to family " + head);
        }
    }
    Dimension{f.n};
    if (f.kind == FamilyKind::reuleaux && f.n != 2)
        throw std::invalid_argument("reuleaux family lives in the plane");
    return f;
}

std::pair<double, double> eps_range(const FamilySpec& f)
{
    switch (f.kind) {
    case FamilyKind::n2:
        return {0.0, 1.0 / 16.0};
    case FamilyKind::high:
        return {0.0, 4.0 / 9.0};
    case FamilyKind::n3:
        return {std::exp(-8.0), std::exp(-2.0)};
    default:
        throw std::invalid_argument("family " + f.name() + " has no eps parameter");
    }
}

CapFunctionPair family_pair(const FamilySpec& f, double eps)
{
    const auto [lo, hi] = eps_range(f);
    const bool ok = f.kind == FamilyKind::n2 ? (eps > lo && eps <= hi)
                  : f.kind == FamilyKind::n3 ? (eps >= lo && eps < hi)
                                             : (eps > lo && eps < hi);
    if (!ok)
        throw std::out_of_range("eps " + fmt(eps) + " outside the range of family " + f.name());
    const Dimension n(f.n);
    switch (f.kind) {
    case FamilyKind::n2:
        return family_n2(n, eps);
    case FamilyKind::high:
        return family_high_n(n, eps, f.rho);
    default:
        return family_n3(n, eps, f.c, f.theta);
    }
}

RadialProfile family_profile(const FamilySpec& f, double eps)
{
    if (f.kind == FamilyKind::ballminus)
        return ball_minus_ball(Dimension(f.n), f.r, f.x);
    if (f.kind == FamilyKind::reuleaux)
        throw std::invalid_argument("reuleaux shapes are not profile sets");
    return build_E(family_pair(f, eps));
}

std::vector<double> geometric_grid(double eps_max, double eps_min, int steps)
{
    if (steps < 2 || !(eps_max > eps_min) || !(eps_min > 0.0))
        throw std::invalid_argument("geometric_grid: need steps >= 2 and eps_max > eps_min > 0");
    std::vector<double> out(static_cast<std::size_t>(steps));
    const double ratio = std::log(eps_min / eps_max);
    for (int i = 0; i < steps; ++i)
        out[i] = eps_max * std::exp(ratio * i / (steps - 1));
    out.front() = eps_max;
    out.back() = eps_min;
    return out;
}

LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y, bool allow_drop)
{
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_loglog: need two or more matching points");
    auto ols = [](const std::vector<double>& lx, const std::vector<double>& ly) {
        const double m = static_cast<double>(lx.size());
        double mx = 0.0, my = 0.0;
        for (std::size_t i = 0; i < lx.size(); ++i) {
            mx += lx[i];
            my += ly[i];
        }
        mx /= m;
        my /= m;
        double sxx = 0.0, sxy = 0.0;
        for (std::size_t i = 0; i < lx.size(); ++i) {
            sxx += (lx[i] - mx) * (lx[i] - mx);
            sxy += (lx[i] - mx) * (ly[i] - my);
        }
        LogLogFit fit;
        fit.slope = sxy / sxx;
        fit.intercept = my - fit.slope * mx;
        fit.points = lx.size();
        double ss = 0.0;
        for (std::size_t i = 0; i < lx.size(); ++i) {
            const double r = ly[i] - fit.intercept - fit.slope * lx[i];
            ss += r * r;
        }
        fit.residual = std::sqrt(ss / m);
        return fit;
    };
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw std::domain_error("fit_loglog: values must be positive");
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(y[i]));
    }
    LogLogFit fit = ols(lx, ly);
    if (!allow_drop || lx.size() < 6)
        return fit;

    std::vector<double> res(lx.size());
    for (std::size_t i = 0; i < lx.size(); ++i)
        res[i] = std::abs(ly[i] - fit.intercept - fit.slope * lx[i]);
    const std::size_t top = static_cast<std::size_t>(std::max_element(lx.begin(), lx.end()) - lx.begin());
    std::vector<double> sorted = res;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double median = sorted[sorted.size() / 2];
    if (res[top] > 2.0 * median) {
        lx.erase(lx.begin() + static_cast<std::ptrdiff_t>(top));
        ly.erase(ly.begin() + static_cast<std::ptrdiff_t>(top));
        fit = ols(lx, ly);
        fit.dropped_largest = true;
    }
    return fit;
}

DecayFit decay_experiment(const FamilySpec& f, std::vector<double> eps_list, std::uint64_t seed, bool parallel)
{
    if (f.kind == FamilyKind::ballminus || f.kind == FamilyKind::reuleaux)
        throw std::invalid_argument("family " + f.name() + " has no eps parameter");
    if (eps_list.size() < 5)
        throw std::invalid_argument("decay_experiment: need at least 5 eps values");
    for (std::size_t i = 1; i < eps_list.size(); ++i)
        if (!(eps_list[i] < eps_list[i - 1]))
            throw std::invalid_argument("decay_experiment: eps values must be strictly decreasing");
    for (double e : eps_list)
        family_pair(f, e);  // range check before any heavy work

    DecayFit out;
    out.family = f;
    out.seed = seed;
    out.eps_grid = eps_list;
    out.rows.resize(eps_list.size());
    const Dimension n(f.n);

    auto run = [&](std::size_t i) {
        const CapFunctionPair pair = family_pair(f, eps_list[i]);
        const RadialProfile p = build_E(pair);
        const DeficitReport rep = report(p);
        const Revolution hull = hull_of_profile(p.scaled(rep.scale));
        DecayRow& row = out.rows[i];
        row.eps = eps_list[i];
        row.diam = rep.diameter;
        row.volume = rep.volume;
        row.delta = rep.delta;
        row.delta_prime_hull = delta_prime(hull);
        row.r_out = rep.r_out;
        row.r_in = rep.r_in;
        row.symdiff_min = rep.symdiff_min;
        row.thm_main_margin = rep.thm_main_margin;
        row.bound_margin = deficit_upper_bound(pair, volume(p)) - isodiametric_deficit(p);
        row.lemma_margin = row.delta - row.delta_prime_hull;
        row.perimeter_margin = check_perimeter_bound(hull);
    };
    if (parallel)
        kernels::map_indices_parallel(eps_list.size(), run);
    else
        kernels::map_indices_serial(eps_list.size(), run);

    for (const auto& row : out.rows) {
        if (!(row.delta > 0.0))
            throw std::runtime_error("decay_experiment: nonpositive deficit at eps " + fmt(row.eps));
        out.deltas.push_back(row.delta);
    }
    out.fit = fit_loglog(out.eps_grid, out.deltas);

    auto& rout_phi = out.ratio_series["r_out/phi_n(delta)"];
    auto& rout_sqrt = out.ratio_series["r_out/sqrt(delta)"];
    auto& rin = out.ratio_series["r_in/delta^(1/n)"];
    for (const auto& row : out.rows) {
        rout_phi.push_back(row.r_out / phi_n(n, row.delta));
        rout_sqrt.push_back(row.r_out / std::sqrt(row.delta));
        rin.push_back(row.r_in / std::pow(row.delta, 1.0 / f.n));
    }
    if (f.kind == FamilyKind::n3) {
        auto& log_ratio = out.ratio_series["delta*|log eps|/eps^2"];
        for (const auto& row : out.rows)
            log_ratio.push_back(row.delta * std::abs(std::log(row.eps)) / (row.eps * row.eps));
    }
    return out;
}

std::string decay_csv(const DecayFit& fit)
{
    std::ostringstream os;
    os << "# family=" << fit.family.name() << "\n";
    os << "# seed=" << fit.seed << "\n";
    os << "# slope=" << fmt(fit.fit.slope) << " intercept=" << fmt(fit.fit.intercept)
       << " residual=" << fmt(fit.fit.residual) << " points=" << fit.fit.points
       << " dropped_largest=" << (fit.fit.dropped_largest ? "true" : "false") << "\n";
    os << "eps,diam,volume,delta,delta_prime_hull,r_out,r_in,symdiff_min,thm_main_margin,bound_margin,"
          "lemma_margin,perimeter_margin";
    for (const auto& [name, series] : fit.ratio_series)
        os << "," << name;
    os << "\n";
    for (std::size_t i = 0; i < fit.rows.size(); ++i) {
        const DecayRow& r = fit.rows[i];
        os << fmt(r.eps) << ',' << fmt(r.diam) << ',' << fmt(r.volume) << ',' << fmt(r.delta) << ','
           << fmt(r.delta_prime_hull) << ',' << fmt(r.r_out) << ',' << fmt(r.r_in) << ',' << fmt(r.symdiff_min)
           << ',' << fmt(r.thm_main_margin) << ',' << fmt(r.bound_margin) << ',' << fmt(r.lemma_margin) << ','
           << fmt(r.perimeter_margin);
        for (const auto& [name, series] : fit.ratio_series)
            os << ',' << fmt(series[i]);
        os << "\n";
    }
    return os.str();
}

}  // namespace isodiam
