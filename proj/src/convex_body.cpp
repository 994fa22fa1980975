#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "isodiam/convex.hpp"
#include "isodiam/kernels.hpp"

namespace isodiam {

namespace {

// Angular step of the boundary samples used for profile hulls.
constexpr double kHullAngleStep = kPi / 65536.0;

double cross2(const Vec2& o, const Vec2& a, const Vec2& b)
{
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double dist2(const Vec2& a, const Vec2& b) { return std::hypot(a[0] - b[0], a[1] - b[1]); }

/// Diameter of a counter-clockwise convex polygon by rotating calipers.
double polygon_diameter(const std::vector<Vec2>& h)
{
    const std::size_t m = h.size();
    double best = 0.0;
    std::size_t j = 1;
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t ni = (i + 1) % m;
        const Vec2 e{h[ni][0] - h[i][0], h[ni][1] - h[i][1]};
        for (std::size_t step = 0; step < m; ++step) {
            const std::size_t nj = (j + 1) % m;
            const Vec2 g{h[nj][0] - h[j][0], h[nj][1] - h[j][1]};
            if (e[0] * g[1] - e[1] * g[0] <= 0.0)
                break;
            j = nj;
        }
        best = std::max({best, dist2(h[i], h[j]), dist2(h[ni], h[j])});
    }
    return best;
}

std::vector<Vec2> polygon_of(const Polytope& f)
{
    std::vector<Vec2> out;
    out.reserve(f.vertices.size());
    for (const auto& v : f.vertices)
        out.push_back({v[0], v[1]});
    return out;
}

/// The full symmetric meridian polygon, counter-clockwise.
std::vector<Vec2> meridian_polygon(const Revolution& r)
{
    std::vector<Vec2> out;
    const std::size_t m = r.z.size();
    for (std::size_t i = 0; i < m; ++i)
        if (r.rho[i] > 0.0 || i == 0)
            out.push_back({r.rho[i], r.z[i]});
    for (std::size_t i = m; i-- > 0;)
        if (r.rho[i] > 0.0 || i + 1 == m)
            out.push_back({-r.rho[i], r.z[i]});
    // drop the axis points duplicated by flat ends
    std::vector<Vec2> clean;
    for (const auto& q : out)
        if (clean.empty() || q != clean.back())
            clean.push_back(q);
    if (clean.size() > 1 && clean.front() == clean.back())
        clean.pop_back();
    return clean;
}

/// int_0^1 (a + (b - a) s)^k ds.
double mean_power(double a, double b, int k)
{
    if (k == 0)
        return 1.0;
    double s = 0.0;
    for (int j = 0; j <= k; ++j)
        s += std::pow(a, j) * std::pow(b, k - j);
    return s / (k + 1);
}

double polytope_perimeter(const Polytope& f)
{
    if (f.n == 2) {
        const auto h = polygon_of(f);
        double s = 0.0;
        for (std::size_t i = 0, j = h.size() - 1; i < h.size(); j = i++)
            s += dist2(h[i], h[j]);
        return s;
    }
    double s = 0.0;
    for (const auto& t : f.facets) {
        const auto& a = f.vertices[t[0]];
        const auto& b = f.vertices[t[1]];
        const auto& c = f.vertices[t[2]];
        const double u[3] = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
        const double w[3] = {c[0] - a[0], c[1] - a[1], c[2] - a[2]};
        const double x = u[1] * w[2] - u[2] * w[1];
        const double y = u[2] * w[0] - u[0] * w[2];
        const double z = u[0] * w[1] - u[1] * w[0];
        s += 0.5 * std::sqrt(x * x + y * y + z * z);
    }
    return s;
}

double polytope_volume(const Polytope& f)
{
    if (f.n == 2) {
        const auto h = polygon_of(f);
        return polygon_area(h);
    }
    double s = 0.0;
    for (const auto& t : f.facets) {
        const auto& a = f.vertices[t[0]];
        const auto& b = f.vertices[t[1]];
        const auto& c = f.vertices[t[2]];
        s += a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
             a[2] * (b[0] * c[1] - b[1] * c[0]);
    }
    return s / 6.0;
}

double polytope_diameter(const Polytope& f)
{
    if (f.n == 2)
        return polygon_diameter(polygon_of(f));
    double best = 0.0;
    for (std::size_t i = 0; i < f.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < f.vertices.size(); ++j) {
            const auto& a = f.vertices[i];
            const auto& b = f.vertices[j];
            best = std::max(best, std::sqrt((a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]) +
                                            (a[2] - b[2]) * (a[2] - b[2])));
        }
    return best;
}

double revolution_volume(const Revolution& r)
{
    const int n = r.n.value();
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < r.z.size(); ++i)
        s += (r.z[i + 1] - r.z[i]) * mean_power(r.rho[i], r.rho[i + 1], n - 1);
    return unit_ball_volume(n - 1) * s;
}

double revolution_perimeter(const Revolution& r)
{
    const int n = r.n.value();
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < r.z.size(); ++i) {
        const double len = std::hypot(r.z[i + 1] - r.z[i], r.rho[i + 1] - r.rho[i]);
        s += len * mean_power(r.rho[i], r.rho[i + 1], n - 2);
    }
    return (n - 1) * unit_ball_volume(n - 1) * s;
}

}  // namespace

Revolution hull_of_profile(const RadialProfile& p)
{
    const auto r = p.radii();
    const auto v = p.angles();
    std::vector<Vec2> pts;
    auto add = [&](double rad, double ang) { pts.push_back({rad * std::sin(ang), rad * std::cos(ang)}); };
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.active(i))
            add(r[i], v[i]);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (v[i] <= 0.0 && v[i + 1] <= 0.0)
            continue;
        // |q''| <= 2 |dr dv| + r dv^2 along the cell; both chord errors stay
        // below the sagitta r_max step^2 / 8 of a pure angle step
        const double dv = std::abs(v[i + 1] - v[i]);
        const double dr = r[i + 1] - r[i];
        const double by_angle = dv / kHullAngleStep;
        const double by_twist = std::sqrt(2.0 * dr * dv / p.r_max()) / kHullAngleStep;
        const int sub = std::max(2, static_cast<int>(std::ceil(std::max(by_angle, by_twist))));
        for (int k = 1; k < sub; ++k) {
            const double s = static_cast<double>(k) / sub;
            add(r[i] + s * (r[i + 1] - r[i]), v[i] + s * (v[i + 1] - v[i]));
        }
    }
    // outer arc closing the set at r_max
    const double vmax = v.back();
    if (vmax > 0.0) {
        const int sub = std::max(2, static_cast<int>(std::ceil(vmax / kHullAngleStep)));
        for (int k = 0; k <= sub; ++k)
            add(p.r_max(), vmax * k / sub);
    }
    const std::size_t half = pts.size();
    for (std::size_t i = 0; i < half; ++i)
        pts.push_back({-pts[i][0], pts[i][1]});
    const auto h = hull_2d(std::move(pts));

    double ext = 0.0;
    std::size_t lo = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        ext = std::max({ext, std::abs(h[i][0]), std::abs(h[i][1])});
        if (h[i][1] < h[lo][1] || (h[i][1] == h[lo][1] && h[i][0] > h[lo][0]))
            lo = i;
    }
    const double axis_tol = 1e-14 * ext;
    double zlo = h[lo][1], zhi = h[lo][1];
    for (const auto& q : h)
        zhi = std::max(zhi, q[1]);

    Revolution out{p.dim(), {zlo}, {0.0}};
    // counter-clockwise from the lowest right point climbs the right side
    for (std::size_t k = 0; k < h.size(); ++k) {
        const Vec2& q = h[(lo + k) % h.size()];
        if (q[0] <= axis_tol) {
            if (k == 0)
                continue;
            break;
        }
        out.z.push_back(q[1]);
        out.rho.push_back(q[0]);
    }
    out.z.push_back(zhi);
    out.rho.push_back(0.0);
    return out;
}

int body_dim(const ConvexBody& f)
{
    if (const auto* poly = std::get_if<Polytope>(&f))
        return poly->n;
    return std::get<Revolution>(f).n.value();
}

double perimeter(const ConvexBody& f)
{
    if (const auto* poly = std::get_if<Polytope>(&f))
        return polytope_perimeter(*poly);
    return revolution_perimeter(std::get<Revolution>(f));
}

double body_volume(const ConvexBody& f)
{
    if (const auto* poly = std::get_if<Polytope>(&f))
        return polytope_volume(*poly);
    return revolution_volume(std::get<Revolution>(f));
}

double body_diameter(const ConvexBody& f)
{
    if (const auto* poly = std::get_if<Polytope>(&f))
        return polytope_diameter(*poly);
    return polygon_diameter(meridian_polygon(std::get<Revolution>(f)));
}

ConvexBody scaled(const ConvexBody& f, double lambda)
{
    if (const auto* poly = std::get_if<Polytope>(&f)) {
        Polytope out = *poly;
        for (auto& v : out.vertices)
            for (double& x : v)
                x *= lambda;
        return out;
    }
    Revolution out = std::get<Revolution>(f);
    for (double& z : out.z)
        z *= lambda;
    for (double& x : out.rho)
        x *= lambda;
    return out;
}

bool body_contains(const ConvexBody& f, std::span<const double> q, double tol)
{
    if (const auto* poly = std::get_if<Polytope>(&f)) {
        if (poly->n == 2) {
            const auto h = polygon_of(*poly);
            const Vec2 x{q[0], q[1]};
            for (std::size_t i = 0, j = h.size() - 1; i < h.size(); j = i++)
                if (cross2(h[j], h[i], x) < -tol * dist2(h[j], h[i]))
                    return false;
            return true;
        }
        for (const auto& t : poly->facets) {
            const auto& a = poly->vertices[t[0]];
            const auto& b = poly->vertices[t[1]];
            const auto& c = poly->vertices[t[2]];
            const double u[3] = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
            const double w[3] = {c[0] - a[0], c[1] - a[1], c[2] - a[2]};
            const double nrm[3] = {u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]};
            const double len = std::sqrt(nrm[0] * nrm[0] + nrm[1] * nrm[1] + nrm[2] * nrm[2]);
            const double s = nrm[0] * (q[0] - a[0]) + nrm[1] * (q[1] - a[1]) + nrm[2] * (q[2] - a[2]);
            if (s > tol * len)
                return false;
        }
        return true;
    }
    const Revolution& r = std::get<Revolution>(f);
    const int n = r.n.value();
    double rho2 = 0.0;
    for (int k = 0; k + 1 < n; ++k)
        rho2 += q[k] * q[k];
    const Vec2 x{std::sqrt(rho2), q[n - 1]};
    const std::size_t m = r.z.size();
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = (i + 1) % m;
        const Vec2 a{r.rho[i], r.z[i]};
        const Vec2 b{r.rho[j], r.z[j]};
        const double len = dist2(a, b);
        if (len > 0.0 && cross2(a, b, x) < -tol * len)
            return false;
    }
    return true;
}

CauchyEstimate cauchy_perimeter(const Polytope& f, int directions, std::uint64_t seed, bool parallel)
{
    if (directions < 1000)
        throw std::invalid_argument("cauchy_perimeter: need at least 1000 directions");
    if (f.n != 2 && f.n != 3)
        throw std::invalid_argument("cauchy_perimeter: n must be 2 or 3");
    if (!(std::abs(polytope_volume(f)) > 0.0))
        throw std::invalid_argument("cauchy_perimeter: degenerate body");
    const int n = f.n;
    std::vector<double> dirs(static_cast<std::size_t>(directions) * n);
    kernels::SphereSampler sampler(seed);
    for (int k = 0; k < directions; ++k)
        sampler.draw(n, dirs.data() + static_cast<std::size_t>(k) * n);
    std::vector<double> vals(static_cast<std::size_t>(directions));
    auto eval = [&](std::size_t k) {
        vals[k] = projection_measure(f, std::span<const double>(dirs.data() + k * n, static_cast<std::size_t>(n)));
    };
    if (parallel)
        kernels::map_indices_parallel(vals.size(), eval);
    else
        kernels::map_indices_serial(vals.size(), eval);

    double mean = 0.0;
    for (double x : vals)
        mean += x;
    mean /= directions;
    double var = 0.0;
    for (double x : vals)
        var += (x - mean) * (x - mean);
    var /= (directions - 1);
    const double factor = sphere_area(Dimension(n)) / unit_ball_volume(n - 1);
    return {factor * mean, factor * std::sqrt(var / directions)};
}

double delta_prime(const ConvexBody& f)
{
    const int n = body_dim(f);
    const double vol = body_volume(f);
    if (!(vol > 0.0))
        throw std::domain_error("delta_prime: zero volume");
    const double ball = unit_ball_volume(n);
    return perimeter(f) / (n * std::pow(ball, 1.0 / n) * std::pow(vol, (n - 1.0) / n)) - 1.0;
}

ConvexReport convex_report(const ConvexBody& f)
{
    ConvexReport rep;
    const int n = body_dim(f);
    rep.perimeter = perimeter(f);
    rep.volume = body_volume(f);
    rep.diameter = body_diameter(f);
    rep.delta_prime = delta_prime(f);
    rep.t_F = std::pow(rep.volume / unit_ball_volume(n), 1.0 / n);
    return rep;
}

double check_perimeter_bound(const ConvexBody& f)
{
    const int n = body_dim(f);
    const double lambda = 2.0 / body_diameter(f);
    return n * unit_ball_volume(n) - std::pow(lambda, n - 1) * perimeter(f);
}

DeficitLemma check_deficit_lemma(const RadialProfile& p)
{
    DeficitLemma out;
    out.delta = isodiametric_deficit(p);
    out.delta_prime_hull = delta_prime(hull_of_profile(p));
    out.holds = out.delta_prime_hull <= out.delta + 1e-8;
    return out;
}

Polytope random_hull(int n, std::uint64_t seed)
{
    if (n != 2 && n != 3)
        throw std::invalid_argument("random_hull: n must be 2 or 3");
    kernels::SphereSampler sampler(seed);
    auto& rng = sampler.engine();
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (;;) {
        const int m = 10 + static_cast<int>(rng() % 191);
        std::vector<std::vector<double>> pts(static_cast<std::size_t>(m), std::vector<double>(n));
        for (auto& q : pts) {
            sampler.draw(n, q.data());
            const double rad = std::pow(unit(rng), 1.0 / n);
            for (double& x : q)
                x *= rad;
        }
        try {
            Polytope h = convex_hull(pts, n);
            return std::get<Polytope>(scaled(h, 2.0 / polytope_diameter(h)));
        } catch (const std::invalid_argument&) {
            // flat draws are redrawn from the same stream
        }
    }
}

Polytope reuleaux_polytope(const ReuleauxShape& s, int samples)
{
    std::vector<std::vector<double>> pts;
    for (const auto& q : reuleaux_polygon(s, samples))
        pts.push_back({q[0], q[1]});
    return convex_hull(pts, 2);
}

}  // namespace isodiam
