#include "isodiam/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace isodiam {

namespace {

GaussRule build_rule(int n)
{
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        // one more evaluation at the converged node for the weight
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        rule.nodes[n / 2] = 0.0;
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int points)
{
    if (points < 1 || points > 256)
        throw std::invalid_argument("gauss_legendre: points out of [1, 256]");
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(points);
    if (it == cache.end())
        it = cache.emplace(points, build_rule(points)).first;
    return it->second;
}

std::vector<double> cosine_grid(double a, double b, int count)
{
    if (count < 2)
        throw std::invalid_argument("cosine_grid: need at least 2 nodes");
    std::vector<double> g(count);
    const double w = b - a;
    for (int i = 0; i < count; ++i) {
        const double u = static_cast<double>(i) / (count - 1);
        g[i] = a + w * 0.5 * (1.0 - std::cos(M_PI * u));
    }
    g.front() = a;
    g.back() = b;
    return g;
}

std::vector<double> uniform_grid(double a, double b, int count)
{
    if (count < 2)
        throw std::invalid_argument("uniform_grid: need at least 2 nodes");
    std::vector<double> g(count);
    for (int i = 0; i < count; ++i)
        g[i] = a + (b - a) * static_cast<double>(i) / (count - 1);
    g.front() = a;
    g.back() = b;
    return g;
}

double interp_linear(std::span<const double> xs, std::span<const double> ys, double x)
{
    if (x <= xs.front())
        return ys.front();
    if (x >= xs.back())
        return ys.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const std::size_t j = static_cast<std::size_t>(it - xs.begin());
    const std::size_t i = j - 1;
    const double u = (x - xs[i]) / (xs[j] - xs[i]);
    return ys[i] + u * (ys[j] - ys[i]);
}

}  // namespace isodiam
