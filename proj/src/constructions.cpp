#include "isodiam/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "isodiam/quadrature.hpp"

namespace isodiam {

double SampledFunction::operator()(double t) const
{
    return interp_linear(x, y, t);
}

Envelope envelope_g(const SampledFunction& f, double eps)
{
    if (f.x.empty())
        throw std::invalid_argument("envelope_g: empty grid");
    if (f.x.size() != f.y.size())
        throw std::invalid_argument("envelope_g: grid and values differ in length");
    if (f.x.front() != 0.0 || std::abs(f.x.back() - eps) > 1e-15 * std::max(1.0, eps))
        throw std::invalid_argument("envelope_g: grid must span [0, eps]");

    const std::size_t m = f.x.size();
    Envelope env;
    env.g.x = f.x;
    env.g.y.assign(m, 0.0);
    env.argmax.assign(m, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
        const double t = f.x[k];
        double best = f.y[k];
        double arg = t;
        // f is linear on each cell, so f(s) + pi sqrt(t - s) is concave there
        for (std::size_t j = 0; j < k; ++j) {
            const double s0 = f.x[j], s1 = f.x[j + 1];
            const double slope = (f.y[j + 1] - f.y[j]) / (s1 - s0);
            double s = s0;
            if (slope > 0.0) {
                const double q = kPi / (2.0 * slope);
                s = std::clamp(t - q * q, s0, s1);
            }
            const double val = f.y[j] + slope * (s - s0) + kPi * std::sqrt(std::max(0.0, t - s));
            if (val > best) {
                best = val;
                arg = s;
            }
        }
        env.g.y[k] = best;
        env.argmax[k] = arg;
    }
    return env;
}

void validate_pair(const CapFunctionPair& pair)
{
    if (!(pair.eps > 0.0 && pair.eps < 4.0 / 9.0))
        throw std::invalid_argument("pair: eps must lie in (0, 4/9)");
    if (pair.f.size() < 2 || pair.f.x != pair.g.x)
        throw std::invalid_argument("pair: f and g must share a grid with at least two nodes");
    for (std::size_t k = 0; k < pair.f.size(); ++k) {
        // the closed end t = eps may reach pi/8
        const bool end = k + 1 == pair.f.size();
        if (!(pair.f.y[k] >= 0.0 && (pair.f.y[k] < kPi / 8.0 || (end && pair.f.y[k] == kPi / 8.0))))
            throw std::invalid_argument("pair: f must lie in [0, pi/8)");
        if (!(pair.g.y[k] >= pair.f.y[k] && pair.g.y[k] < kPi))
            throw std::invalid_argument("pair: g must satisfy f <= g < pi");
    }
}

RadialProfile build_E(const CapFunctionPair& pair, int ball_nodes)
{
    validate_pair(pair);
    const double eps = pair.eps;
    const auto& t = pair.f.x;
    ProfileBuilder b(pair.n);
    b.segment(0.0, 1.0 - eps, ball_nodes, ProfileBuilder::Spacing::uniform, [](double) { return kPi; });
    for (std::size_t k = 0; k < t.size(); ++k)
        b.node(1.0 - eps + t[k], kPi - pair.g.y[k]);
    for (std::size_t k = t.size(); k-- > 0;)
        b.node(1.0 + eps - t[k], pair.f.y[k]);
    return std::move(b).build();
}

double bump_cap_integral(const CapFunctionPair& pair, double a, double b)
{
    const int n = pair.n.value();
    const GaussRule& rule = gauss_legendre(4);
    const auto& x = pair.f.x;
    double total = 0.0;
    for (std::size_t j = 0; j + 1 < x.size(); ++j) {
        const double lo = std::max(a, x[j]);
        const double hi = std::min(b, x[j + 1]);
        if (!(hi > lo))
            continue;
        total += integrate_gauss([&](double s) { return detail::cap_area_raw(n, pair.f(s)); }, lo, hi, rule);
    }
    return total;
}

double deficit_upper_bound(const CapFunctionPair& pair, double vol)
{
    if (!(vol > 0.0))
        throw std::invalid_argument("deficit_upper_bound: volume must be positive");
    const int n = pair.n.value();
    const GaussRule& rule = gauss_legendre(4);
    const auto& x = pair.f.x;
    double total = 0.0;
    for (std::size_t j = 0; j + 1 < x.size(); ++j) {
        const double x0 = x[j], w = x[j + 1] - x0;
        const double f0 = pair.f.y[j], df = pair.f.y[j + 1] - f0;
        const double g0 = pair.g.y[j], dg = pair.g.y[j + 1] - g0;
        total += integrate_gauss(
            [&](double s) {
                const double u = (s - x0) / w;
                return detail::cap_area_raw(n, g0 + u * dg) - detail::cap_area_raw(n, f0 + u * df);
            },
            x0, x[j + 1], rule);
    }
    return total / vol;
}

namespace {

std::vector<double> family_grid(double eps, int nodes, std::initializer_list<double> breaks)
{
    if (nodes < 3)
        throw std::invalid_argument("family grid needs at least 3 nodes");
    std::vector<double> x = cosine_grid(0.0, eps, nodes);
    for (double b : breaks) {
        if (!(b > 0.0 && b < eps))
            continue;
        const auto it = std::lower_bound(x.begin(), x.end(), b);
        const double tol = 1e-12 * eps;
        if (std::abs(*it - b) > tol && std::abs(*(it - 1) - b) > tol)
            x.insert(it, b);
    }
    return x;
}

CapFunctionPair make_pair(Dimension n, double eps, SampledFunction f, std::string family,
                          std::optional<FamilyParams> params)
{
    CapFunctionPair pair;
    pair.n = n;
    pair.eps = eps;
    Envelope env = envelope_g(f, eps);
    pair.f = std::move(f);
    pair.g = std::move(env.g);
    pair.s_star = std::move(env.argmax);
    pair.family = std::move(family);
    pair.params = params;
    validate_pair(pair);
    return pair;
}

}  // namespace

CapFunctionPair family_n2(Dimension n, double eps, int nodes)
{
    if (!(eps > 0.0 && eps <= 1.0 / 16.0))
        throw std::invalid_argument("family_n2: eps must lie in (0, 1/16]");
    SampledFunction f;
    // the envelope switches from s = 0 to an interior maximiser at 16 eps^2
    f.x = family_grid(eps, nodes, {16.0 * eps * eps});
    f.y.resize(f.x.size());
    for (std::size_t k = 0; k < f.x.size(); ++k)
        f.y[k] = kPi * f.x[k] / (8.0 * eps);
    f.y.back() = kPi / 8.0;
    return make_pair(n, eps, std::move(f), "n2", std::nullopt);
}

CapFunctionPair family_high_n(Dimension n, double eps, double rho, int nodes)
{
    if (!(eps > 0.0 && eps < 4.0 / 9.0))
        throw std::invalid_argument("family_high_n: eps must lie in (0, 4/9)");
    if (!(rho > 0.0 && rho < kPi / 8.0))
        throw std::invalid_argument("family_high_n: rho must lie in (0, pi/8)");
    SampledFunction f;
    f.x = family_grid(eps, nodes, {});
    f.y.assign(f.x.size(), 0.0);
    f.y.front() = rho;
    FamilyParams p;
    p.rho = rho;
    return make_pair(n, eps, std::move(f), "high", p);
}

SampledFunction n3_base(double eps, double c, int nodes)
{
    SampledFunction f;
    f.x = family_grid(eps, nodes, {});
    f.y.resize(f.x.size());
    const double l = std::abs(std::log(eps));
    for (std::size_t k = 0; k < f.x.size(); ++k)
        f.y[k] = c * std::pow(f.x[k] / eps, l);
    return f;
}

CapFunctionPair family_n3(Dimension n, double eps, double c, double theta, int nodes)
{
    if (!(eps > 0.0 && eps < std::exp(-2.0)))
        throw std::invalid_argument("family_n3: eps must lie in (0, e^-2)");
    if (!(c > 0.0 && c < kPi / 8.0))
        throw std::invalid_argument("family_n3: c must lie in (0, pi/8)");
    if (!(theta > std::exp(-0.5) && theta < 1.0))
        throw std::invalid_argument("family_n3: theta must lie in (e^-1/2, 1)");
    const double width = (1.0 - theta) * eps;
    const double l = std::abs(std::log(eps));
    SampledFunction f;
    f.x = family_grid(width, nodes, {});
    f.y.resize(f.x.size());
    for (std::size_t k = 0; k < f.x.size(); ++k)
        f.y[k] = c * std::pow((f.x[k] + theta * eps) / eps, l);
    FamilyParams p;
    p.c = c;
    p.theta = theta;
    p.l = l;
    return make_pair(n, width, std::move(f), "n3", p);
}

RadialProfile ball_minus_ball(Dimension n, double r, double offset, int nodes)
{
    if (!(r > 0.0 && offset >= 0.0 && r < 1.0 - offset))
        throw std::invalid_argument("ball_minus_ball: need 0 < r < 1 - offset, offset >= 0");
    const double a = std::abs(offset - r);
    const double b = offset + r;
    auto angle = [&](double R) {
        if (R <= a)
            return offset < r ? 0.0 : kPi;
        if (R >= b)
            return kPi;
        const double c = std::clamp((R * R + offset * offset - r * r) / (2.0 * R * offset), -1.0, 1.0);
        return kPi - std::acos(c);
    };
    ProfileBuilder bld(n);
    using S = ProfileBuilder::Spacing;
    if (a > 0.0)
        bld.segment(0.0, a, 65, S::uniform, [&](double) { return offset < r ? 0.0 : kPi; });
    if (b > a) {
        bld.segment(a, b, nodes, S::cosine, angle);
    } else {
        bld.node(b, kPi);
    }
    bld.segment(b, 1.0, 65, S::uniform, [](double) { return kPi; });
    return std::move(bld).build();
}

RadialProfile ball_profile(Dimension n, double radius, int nodes)
{
    ProfileBuilder b(n);
    b.segment(0.0, radius, nodes, ProfileBuilder::Spacing::uniform, [](double) { return kPi; });
    return std::move(b).build();
}

RadialProfile random_profile(Dimension n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r_max = 0.6 + 0.8 * unit(rng);
    const double a0 = 0.4 + 2.4 * unit(rng);
    double amp[3], phase[3];
    for (int k = 0; k < 3; ++k) {
        amp[k] = (1.2 * unit(rng) - 0.6) / (k + 1);
        phase[k] = 2.0 * kPi * unit(rng);
    }
    ProfileBuilder b(n);
    b.segment(0.0, r_max, 129, ProfileBuilder::Spacing::uniform, [&](double r) {
        double v = a0;
        for (int k = 0; k < 3; ++k)
            v += amp[k] * std::sin((k + 1) * kPi * r / r_max + phase[k]);
        return std::clamp(v, 0.0, kPi);
    });
    return std::move(b).build();
}

}  // namespace isodiam
