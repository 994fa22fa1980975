#pragma once

#include <span>
#include <vector>

namespace isodiam {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached rule with `points` nodes (Newton iteration on P_points).
const GaussRule& gauss_legendre(int points);

template <class F>
double integrate_gauss(const F& f, double a, double b, const GaussRule& rule)
{
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k)
        sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
    return sum * half;
}

/// Endpoint behaviour of an integrand on a piece.  A square-root type
/// singularity at an end is removed by r = a + (b - a) u^2 (or mirrored).
enum class Singular { none, left, right, both };

template <class F>
double integrate_piece(const F& f, double a, double b, Singular sing, const GaussRule& rule)
{
    if (!(b > a))
        return 0.0;
    switch (sing) {
    case Singular::none:
        return integrate_gauss(f, a, b, rule);
    case Singular::left: {
        const double w = b - a;
        return integrate_gauss([&](double u) { return f(a + w * u * u) * 2.0 * w * u; }, 0.0, 1.0, rule);
    }
    case Singular::right: {
        const double w = b - a;
        return integrate_gauss([&](double u) { return f(b - w * u * u) * 2.0 * w * u; }, 0.0, 1.0, rule);
    }
    case Singular::both: {
        const double m = 0.5 * (a + b);
        return integrate_piece(f, a, m, Singular::left, rule) + integrate_piece(f, m, b, Singular::right, rule);
    }
    }
    return 0.0;
}

/// Grid on [a, b] with `count` nodes, clustered quadratically at both ends
/// (Chebyshev-Lobatto spacing).  Endpoints are exact.
std::vector<double> cosine_grid(double a, double b, int count);

/// Uniform grid on [a, b] with `count` nodes, endpoints exact.
std::vector<double> uniform_grid(double a, double b, int count);

/// Linear interpolation of (xs, ys) at x; xs strictly increasing.
/// Values outside [xs.front(), xs.back()] are clamped to the end values.
double interp_linear(std::span<const double> xs, std::span<const double> ys, double x);

/// Golden-section minimiser of a unimodal f on [a, b]; returns argmin.
template <class F>
double golden_min(const F& f, double a, double b, double tol, int max_iter = 200)
{
    constexpr double invphi = 0.6180339887498949;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return fc <= fd ? c : d;
}

}  // namespace isodiam
