#include <algorithm>
#include <cmath>
#include <vector>

#include "isodiam/profile.hpp"
#include "isodiam/quadrature.hpp"

namespace isodiam {

namespace {

// Per-sphere symmetric difference between the cap of angle v around e and
// the section of B(t e), weighted by r^{n-1}.
struct SphereTerm {
    int n;
    double full;
    double t;

    double operator()(double r, double v) const
    {
        double d;
        if (t == 0.0) {
            d = r < 1.0 ? full - detail::cap_area_raw(n, v) : detail::cap_area_raw(n, v);
        } else {
            const double at = std::abs(t);
            const double c = std::clamp((r * r + at * at - 1.0) / (2.0 * r * at), -1.0, 1.0);
            const double beta = r > 0.0 ? std::acos(c) : (at < 1.0 ? kPi : 0.0);
            if (t > 0.0) {
                d = std::abs(detail::cap_area_raw(n, v) - detail::cap_area_raw(n, beta));
            } else {
                const double w = kPi - beta;
                d = detail::cap_area_raw(n, std::min(v, w)) + full - detail::cap_area_raw(n, std::max(v, w));
            }
        }
        return std::pow(r, n - 1) * d;
    }
};

double symdiff_with(const RadialProfile& p, double t, const GaussRule& rule)
{
    const int n = p.n();
    const SphereTerm term{n, detail::sphere_area_raw(n), t};
    const double at = std::abs(t);
    const double outer = std::max(p.r_max(), 1.0 + at);

    // radii where the ball section degenerates; sqrt-type behaviour when t != 0
    double cuts[2];
    int ncut = 0;
    if (t == 0.0) {
        cuts[ncut++] = 1.0;
    } else {
        if (std::abs(1.0 - at) > 0.0)
            cuts[ncut++] = std::abs(1.0 - at);
        cuts[ncut++] = 1.0 + at;
    }
    const bool sqrt_type = t != 0.0;
    auto is_cut = [&](double x) {
        for (int k = 0; k < ncut; ++k)
            if (x == cuts[k])
                return true;
        return false;
    };

    auto piece = [&](double a, double b, double va, double vb) {
        auto f = [&](double r) { return term(r, va + (vb - va) * (r - a) / (b - a)); };
        Singular s = Singular::none;
        if (sqrt_type) {
            const bool left = is_cut(a), right = is_cut(b);
            s = left && right ? Singular::both : left ? Singular::left : right ? Singular::right : Singular::none;
        }
        return integrate_piece(f, a, b, s, rule);
    };
    auto cell = [&](double a, double b, double va, double vb) {
        double x0 = a, v0 = va, total = 0.0;
        for (int k = 0; k < ncut; ++k) {
            const double c = cuts[k];
            if (c > x0 && c < b) {
                const double vc = va + (vb - va) * (c - a) / (b - a);
                total += piece(x0, c, v0, vc);
                x0 = c;
                v0 = vc;
            }
        }
        return total + piece(x0, b, v0, vb);
    };

    if (ncut == 2 && cuts[0] > cuts[1])
        std::swap(cuts[0], cuts[1]);

    const auto r = p.radii();
    const auto v = p.angles();
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
        total += cell(r[i], r[i + 1], v[i], v[i + 1]);
    if (outer > p.r_max())
        total += cell(p.r_max(), outer, 0.0, 0.0);
    return total;
}

}  // namespace

double symdiff_axis_ball(const RadialProfile& p, double t)
{
    return symdiff_with(p, t, gauss_legendre(6));
}

SymdiffMin best_symdiff(const RadialProfile& p)
{
    const double span = 1.0 + p.r_max();
    constexpr int kGrid = 257;
    const GaussRule& coarse = gauss_legendre(2);
    std::vector<double> ts(kGrid);
    std::vector<double> vals(kGrid);
    for (int k = 0; k < kGrid; ++k) {
        ts[k] = span * (2.0 * k / (kGrid - 1) - 1.0);
        vals[k] = symdiff_with(p, ts[k], coarse);
    }
    std::vector<int> idx(kGrid);
    for (int k = 0; k < kGrid; ++k)
        idx[k] = k;
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return vals[a] < vals[b]; });

    const GaussRule& fine = gauss_legendre(6);
    auto fine_at = [&](double t) { return symdiff_with(p, t, fine); };
    SymdiffMin best{ts[idx[0]], fine_at(ts[idx[0]])};
    for (int m = 0; m < 3; ++m) {
        const int k = idx[m];
        const double lo = ts[std::max(k - 1, 0)];
        const double hi = ts[std::min(k + 1, kGrid - 1)];
        const double t = golden_min(fine_at, lo, hi, 1e-7 * span);
        const double val = fine_at(t);
        if (val < best.value || (val == best.value && t < best.t))
            best = {t, val};
        const double node_val = fine_at(ts[k]);
        if (node_val < best.value || (node_val == best.value && ts[k] < best.t))
            best = {ts[k], node_val};
    }
    return best;
}

}  // namespace isodiam
