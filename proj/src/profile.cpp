#include "isodiam/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "isodiam/kernels.hpp"
#include "isodiam/quadrature.hpp"

namespace isodiam {

RadialProfile::RadialProfile(Dimension n, std::vector<double> radii, std::vector<double> angles)
    : n_(n), r_(std::move(radii)), v_(std::move(angles))
{
    if (r_.size() != v_.size())
        throw std::invalid_argument("profile: radii and angles differ in length");
    if (r_.size() < kMinNodes)
        throw std::invalid_argument("profile: need at least " + std::to_string(kMinNodes) + " nodes, got " +
                                    std::to_string(r_.size()));
    if (r_.front() != 0.0)
        throw std::invalid_argument("profile: first radius must be 0");
    for (std::size_t i = 1; i < r_.size(); ++i)
        if (!(r_[i] > r_[i - 1]) || !std::isfinite(r_[i]))
            throw std::invalid_argument("profile: radii not strictly increasing at node " + std::to_string(i));
    for (std::size_t i = 0; i < v_.size(); ++i)
        if (!(v_[i] >= 0.0 && v_[i] <= kPi))
            throw std::invalid_argument("profile: angle " + std::to_string(v_[i]) + " at node " +
                                        std::to_string(i) + " outside [0, pi]");
}

double RadialProfile::angle_at(double r) const
{
    if (r < 0.0 || r > r_.back())
        return 0.0;
    return interp_linear(r_, v_, r);
}

bool RadialProfile::active(std::size_t i) const
{
    if (v_[i] > 0.0)
        return true;
    if (i > 0 && v_[i - 1] > 0.0)
        return true;
    return i + 1 < v_.size() && v_[i + 1] > 0.0;
}

RadialProfile RadialProfile::scaled(double lambda) const
{
    if (!(lambda > 0.0))
        throw std::invalid_argument("profile: scale factor must be positive");
    std::vector<double> r(r_.size());
    for (std::size_t i = 0; i < r_.size(); ++i)
        r[i] = lambda * r_[i];
    return RadialProfile(n_, std::move(r), v_);
}

bool RadialProfile::contains(std::span<const double> q) const
{
    double r2 = 0.0;
    for (double x : q)
        r2 += x * x;
    const double r = std::sqrt(r2);
    if (r > r_.back())
        return false;
    if (r == 0.0)
        return v_.front() > 0.0;
    const double phi = std::acos(std::clamp(q.back() / r, -1.0, 1.0));
    return phi < angle_at(r);
}

ProfileBuilder& ProfileBuilder::node(double r, double angle)
{
    if (!(angle >= 0.0 && angle <= kPi))
        throw std::invalid_argument("profile builder: angle " + std::to_string(angle) + " outside [0, pi]");
    if (r_.empty()) {
        r_.push_back(r);
        v_.push_back(angle);
        nominal_ = r;
        return *this;
    }
    // radii are compared against the unshifted position of the last node
    const double same = 1e-14 * std::max(1.0, std::abs(nominal_));
    if (r < nominal_ - same)
        throw std::invalid_argument("profile builder: radii out of order");
    if (r <= nominal_ + same && angle == v_.back())
        return *this;
    nominal_ = std::max(r, nominal_);
    const double shifted = r_.back() + gap_ * std::max(1.0, std::abs(r_.back()));
    r_.push_back(std::max(r, shifted));
    v_.push_back(angle);
    return *this;
}

ProfileBuilder& ProfileBuilder::segment(double a, double b, int nodes, Spacing spacing,
                                        const std::function<double(double)>& angle)
{
    const auto grid = spacing == Spacing::uniform ? uniform_grid(a, b, nodes) : cosine_grid(a, b, nodes);
    for (double x : grid)
        node(x, angle(x));
    return *this;
}

RadialProfile ProfileBuilder::build() &&
{
    return RadialProfile(n_, std::move(r_), std::move(v_));
}

double volume(const RadialProfile& p)
{
    const int n = p.n();
    const auto r = p.radii();
    const auto v = p.angles();
    const GaussRule& rule = gauss_legendre(4);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
        if (v[i] == 0.0 && v[i + 1] == 0.0)
            continue;
        const double ra = r[i];
        const double w = r[i + 1] - ra;
        const double va = v[i];
        const double dv = v[i + 1] - va;
        total += integrate_gauss(
            [&](double x) {
                const double u = (x - ra) / w;
                return std::pow(x, n - 1) * detail::cap_area_raw(n, va + u * dv);
            },
            ra, r[i + 1], rule);
    }
    return total;
}

namespace {

struct Cell {
    double r0, r1, v0, v1;
    // stays within [min(v0, v1), max(v0, v1)] under rounding
    double angle(double r) const
    {
        const double s = std::clamp((r - r0) / (r1 - r0), 0.0, 1.0);
        return std::clamp(v0 + (v1 - v0) * s, std::min(v0, v1), std::max(v0, v1));
    }
};

double pair_value(const Cell& a, double ra, const Cell& b, double rb)
{
    return chord(ra, rb, CapAngle(std::min(a.angle(ra) + b.angle(rb), kPi)));
}

// coordinate ascent over one pair of cells
double polish_cells(const Cell& a, const Cell& b, double ra, double rb)
{
    double best = pair_value(a, ra, b, rb);
    for (int round = 0; round < 4; ++round) {
        const double tol_a = 1e-10 * (a.r1 - a.r0);
        ra = golden_min([&](double x) { return -pair_value(a, x, b, rb); }, a.r0, a.r1, tol_a);
        const double tol_b = 1e-10 * (b.r1 - b.r0);
        rb = golden_min([&](double x) { return -pair_value(a, ra, b, x); }, b.r0, b.r1, tol_b);
        const double val = pair_value(a, ra, b, rb);
        if (val <= best * (1.0 + 1e-15)) {
            best = std::max(best, val);
            break;
        }
        best = val;
    }
    return best;
}

}  // namespace

double diameter(const RadialProfile& p)
{
    const auto r = p.radii();
    const auto v = p.angles();
    std::vector<unsigned char> active(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        active[i] = p.active(i) ? 1 : 0;
    const kernels::PairHit hit = kernels::max_pair_chord_parallel(r, v, active);
    if (hit.value < 0.0)
        return 0.0;
    double best = chord(r[hit.i], r[hit.j], CapAngle(std::min(v[hit.i] + v[hit.j], kPi)));

    auto cells_at = [&](std::size_t k) {
        std::vector<Cell> cells;
        if (k > 0 && (v[k - 1] > 0.0 || v[k] > 0.0))
            cells.push_back({r[k - 1], r[k], v[k - 1], v[k]});
        if (k + 1 < r.size() && (v[k] > 0.0 || v[k + 1] > 0.0))
            cells.push_back({r[k], r[k + 1], v[k], v[k + 1]});
        return cells;
    };
    for (const Cell& a : cells_at(hit.i))
        for (const Cell& b : cells_at(hit.j))
            best = std::max(best, polish_cells(a, b, std::clamp(r[hit.i], a.r0, a.r1),
                                               std::clamp(r[hit.j], b.r0, b.r1)));
    return best;
}

double isodiametric_deficit(const RadialProfile& p)
{
    const double vol = volume(p);
    if (!(vol > 0.0))
        throw std::domain_error("isodiametric_deficit: profile has zero volume");
    const double d = diameter(p);
    return std::pow(0.5 * d, p.n()) * unit_ball_volume(p.n()) / vol - 1.0;
}

DeficitReport report(const RadialProfile& p)
{
    const double vol0 = volume(p);
    if (!(vol0 > 0.0))
        throw std::domain_error("report: profile has zero volume");
    const double d0 = diameter(p);
    DeficitReport rep;
    rep.scale = 2.0 / d0;
    const RadialProfile q = p.scaled(rep.scale);
    rep.diameter = diameter(q);
    rep.volume = volume(q);
    const double ball = unit_ball_volume(q.n());
    rep.delta = std::pow(0.5 * rep.diameter, q.n()) * ball / rep.volume - 1.0;
    rep.r_out = r_out(q);
    rep.r_in = r_in(q);
    rep.hausdorff_lo = std::max(rep.r_in, rep.r_out);
    rep.hausdorff_hi = 2.0 * rep.hausdorff_lo;
    const SymdiffMin sm = best_symdiff(q);
    rep.symdiff_min = sm.value;
    rep.symdiff_t = sm.t;
    const ConstantsTable c = constant_C(q.dim());
    rep.thm_main_margin = c.C * std::sqrt(std::max(rep.delta, 0.0)) - rep.symdiff_min / (3.0 * ball);
    rep.r_in_axis_restricted = true;
    return rep;
}

}  // namespace isodiam
