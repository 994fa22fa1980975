#include "isodiam/geomcore.hpp"

#include <atomic>
#include <cmath>
#include <iostream>

#include "isodiam/quadrature.hpp"

namespace isodiam {

namespace {

std::atomic<std::uint64_t> g_clamp_events{0};

constexpr double kBallVolume[9] = {
    1.0,
    2.0,
    kPi,
    4.0 * kPi / 3.0,
    kPi * kPi / 2.0,
    8.0 * kPi * kPi / 15.0,
    kPi * kPi * kPi / 6.0,
    16.0 * kPi * kPi * kPi / 105.0,
    kPi * kPi * kPi * kPi / 24.0,
};

// int_0^alpha sin^m
double sin_power_integral(int m, double alpha)
{
    if (alpha <= 1.0) {
        // all-positive quadrature keeps relative accuracy for tiny caps
        const GaussRule& rule = gauss_legendre(16);
        return integrate_gauss(
            [m](double x) {
                const double s = std::sin(x);
                double p = 1.0;
                for (int k = 0; k < m; ++k)
                    p *= s;
                return p;
            },
            0.0, alpha, rule);
    }
    const double s = std::sin(alpha);
    const double c = std::cos(alpha);
    double even = alpha;       // I_0
    double odd = 1.0 - c;      // I_1
    double spow_even = 1.0;    // sin^{k-1} for the next odd k
    double spow_odd = s;       // sin^{k-1} for the next even k
    for (int k = 2; k <= m; ++k) {
        if (k % 2 == 0) {
            even = -spow_odd * c / k + (k - 1.0) / k * even;
            spow_odd *= s * s;
        } else {
            spow_even *= s * s;
            odd = -spow_even * c / k + (k - 1.0) / k * odd;
        }
    }
    return (m % 2 == 0) ? even : odd;
}

}  // namespace

double unit_ball_volume(int n)
{
    if (n < 1 || n > kMaxDim)
        throw std::out_of_range("unit_ball_volume: n=" + std::to_string(n) + " outside [1, 8]");
    return kBallVolume[n];
}

double detail::sphere_area_raw(int n) { return n * kBallVolume[n]; }

double sphere_area(Dimension n) { return detail::sphere_area_raw(n.value()); }

double detail::cap_area_raw(int n, double alpha)
{
    if (alpha <= 0.0)
        return 0.0;
    if (alpha >= kPi)
        return sphere_area_raw(n);
    switch (n) {
    case 2:
        return 2.0 * alpha;
    case 3: {
        const double h = std::sin(0.5 * alpha);
        return 4.0 * kPi * h * h;
    }
    default:
        // H^{n-2}(S^{n-2}) = (n-1) |B^{n-1}|
        return (n - 1) * kBallVolume[n - 1] * sin_power_integral(n - 2, alpha);
    }
}

double cap_area(Dimension n, CapAngle alpha) { return detail::cap_area_raw(n.value(), alpha.value()); }

double cap_area_quadrature(Dimension n, CapAngle alpha)
{
    const int m = n.value() - 2;
    const double a = alpha.value();
    const GaussRule& rule = gauss_legendre(64);
    auto integrand = [m](double x) { return std::pow(std::sin(x), m); };
    double total = 0.0;
    double lo = 0.0;
    while (lo < a) {
        const double hi = std::min(lo + 0.5 * kPi, a);
        total += integrate_gauss(integrand, lo, hi, rule);
        lo = hi;
    }
    return (n.value() - 1) * kBallVolume[n.value() - 1] * total;
}

CapAngle inverse_cap_area(Dimension n, double area)
{
    const double full = sphere_area(n);
    if (!(area >= 0.0 && area <= full))
        throw std::out_of_range("inverse_cap_area: area " + std::to_string(area) + " outside [0, " +
                                std::to_string(full) + "]");
    if (area == 0.0)
        return CapAngle(0.0);
    if (area == full)
        return CapAngle(kPi);
    switch (n.value()) {
    case 2:
        return CapAngle::clamped(0.5 * area);
    case 3: {
        const double q = std::sqrt(area / (4.0 * kPi));
        return CapAngle::clamped(2.0 * std::asin(std::min(q, 1.0)));
    }
    default:
        break;
    }
    // cap_area is strictly increasing; bisection to the last representable bit
    double lo = 0.0;
    double hi = kPi;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        if (detail::cap_area_raw(n.value(), mid) < area)
            lo = mid;
        else
            hi = mid;
    }
    const double fl = area - detail::cap_area_raw(n.value(), lo);
    const double fh = detail::cap_area_raw(n.value(), hi) - area;
    return CapAngle(fl <= fh ? lo : hi);
}

double chord(double r1, double r2, CapAngle theta)
{
    if (r1 < 0.0 || r2 < 0.0)
        throw std::invalid_argument("chord: negative radius");
    const double h = std::sin(0.5 * theta.value());
    const double d = r1 - r2;
    return std::sqrt(d * d + 4.0 * r1 * r2 * h * h);
}

CapAngle psi(double s, double t, double eps)
{
    if (!(0.0 <= s && s <= t && t <= eps && eps < 4.0 / 9.0))
        throw std::invalid_argument("psi: requires 0 <= s <= t <= eps < 4/9");
    const double a = 1.0 + eps - s;
    const double b = 1.0 - eps + t;
    // cos psi = (4 - a^2 - b^2) / (2ab) = 1 - y with a + b = 2 + t - s
    const double d = t - s;
    const double y = d * (4.0 + d) / (2.0 * a * b);
    const double h = std::sqrt(0.5 * y);
    return CapAngle::clamped(2.0 * std::asin(std::min(h, 1.0)));
}

ConstantsTable constant_C(Dimension n)
{
    const int d = n.value();
    ConstantsTable t;
    t.n = d;
    const double inv_nprime = (d - 1.0) / d;
    t.C0 = 181.0 * d * d * d / std::pow(2.0 - std::pow(2.0, inv_nprime), 1.5);
    t.C = t.C0 + 1.0;
    t.omega_prev = unit_ball_volume(d - 1);
    t.sphere_area = sphere_area(n);
    return t;
}

double clamped_acos(double x)
{
    if (x > 1.0 || x < -1.0) {
        const double excess = x > 1.0 ? x - 1.0 : -1.0 - x;
        if (excess > 1e-9) {
            const auto k = g_clamp_events.fetch_add(1, std::memory_order_relaxed);
            if (k < 16)
                std::clog << "isodiam: acos argument clamped by " << excess << '\n';
        }
        return x > 0.0 ? 0.0 : kPi;
    }
    return std::acos(x);
}

std::uint64_t clamp_event_count() { return g_clamp_events.load(std::memory_order_relaxed); }

}  // namespace isodiam
