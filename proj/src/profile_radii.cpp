#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "isodiam/profile.hpp"
#include "isodiam/quadrature.hpp"

namespace isodiam {

namespace {

double chord_raw(double r1, double r2, double theta)
{
    const double h = std::sin(0.5 * theta);
    const double d = r1 - r2;
    return std::sqrt(d * d + 4.0 * r1 * r2 * h * h);
}

// Distance from a meridian point to the closure of a profile set.  Nodes are
// grouped in blocks carrying their radius range and largest angle, which
// bound the distance from below; blocks are visited in bound order.
class SetDistance {
public:
    explicit SetDistance(const RadialProfile& p) : r_(p.radii()), v_(p.angles())
    {
        active_.resize(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            active_[i] = p.active(i);
        for (std::size_t a = 0; a < r_.size(); a += kBlock) {
            const std::size_t b = std::min(a + kBlock, r_.size()) - 1;
            Block blk{a, b, 0.0, false};
            for (std::size_t i = a; i <= b; ++i)
                if (active_[i]) {
                    blk.any = true;
                    blk.vmax = std::max(blk.vmax, v_[i]);
                }
            if (blk.any)
                blocks_.push_back(blk);
        }
        order_.resize(blocks_.size());
    }

    double operator()(double rho, double z) const
    {
        const double ry = std::hypot(rho, z);
        const double phi = std::atan2(rho, z);
        if (blocks_.empty())
            return std::numeric_limits<double>::infinity();
        if (ry <= r_.back() && phi < interp_linear(r_, v_, ry))
            return 0.0;

        std::vector<std::pair<double, std::size_t>>& order = order_;
        for (std::size_t k = 0; k < blocks_.size(); ++k)
            order[k] = {block_bound(blocks_[k], ry, phi), k};
        std::sort(order.begin(), order.end());

        double best = std::numeric_limits<double>::infinity();
        std::size_t best_i = 0;
        for (const auto& [bound, k] : order) {
            if (bound >= best)
                break;
            const Block& blk = blocks_[k];
            for (std::size_t i = blk.a; i <= blk.b; ++i) {
                if (!active_[i])
                    continue;
                const double d = node_distance(i, ry, phi);
                if (d < best) {
                    best = d;
                    best_i = i;
                }
            }
        }
        if (best == 0.0)
            return 0.0;
        // interior of the two cells around the nearest node
        for (std::size_t c : {best_i, best_i + 1}) {
            if (c == 0 || c >= r_.size())
                continue;
            const double r0 = r_[c - 1], r1 = r_[c], v0 = v_[c - 1], v1 = v_[c];
            if (v0 == 0.0 && v1 == 0.0)
                continue;
            auto dist = [&](double r) {
                const double v = v0 + (v1 - v0) * (r - r0) / (r1 - r0);
                return phi <= v ? std::abs(ry - r) : chord_raw(ry, r, phi - v);
            };
            const double rs = golden_min(dist, r0, r1, 1e-6 * (r1 - r0));
            best = std::min(best, dist(rs));
        }
        return best;
    }

private:
    static constexpr std::size_t kBlock = 32;
    struct Block {
        std::size_t a, b;
        double vmax;
        bool any;
    };

    double node_distance(std::size_t i, double ry, double phi) const
    {
        if (phi <= v_[i])
            return std::abs(ry - r_[i]);
        return chord_raw(ry, r_[i], phi - v_[i]);
    }

    // distance to the annular sector r in [r_a, r_b], angle <= vmax
    double block_bound(const Block& blk, double ry, double phi) const
    {
        const double ra = r_[blk.a], rb = r_[blk.b];
        if (phi <= blk.vmax)
            return ry < ra ? ra - ry : (ry > rb ? ry - rb : 0.0);
        const double th = phi - blk.vmax;
        const double rs = std::clamp(ry * std::cos(th), ra, rb);
        return chord_raw(ry, rs, th);
    }

    std::span<const double> r_;
    std::span<const double> v_;
    std::vector<bool> active_;
    std::vector<Block> blocks_;
    // scratch; an instance is never shared between threads
    mutable std::vector<std::pair<double, std::size_t>> order_;
};

// sup over the half disk of radius 1 centred at (0, t) of the distance
struct HalfDiskSup {
    const SetDistance& dist;
    double t;

    double at(double s, double a) const { return dist(s * std::sin(a), t + s * std::cos(a)); }

    double operator()() const
    {
        constexpr int kRadial = 16;
        constexpr int kAngular = 17;
        struct Cand {
            double value, s, a;
        };
        std::vector<Cand> cands;
        cands.reserve(kRadial * kAngular + 1);
        cands.push_back({at(0.0, 0.0), 0.0, 0.0});
        for (int i = 1; i <= kRadial; ++i) {
            const double s = static_cast<double>(i) / kRadial;
            for (int j = 0; j < kAngular; ++j) {
                const double a = kPi * j / (kAngular - 1);
                cands.push_back({at(s, a), s, a});
            }
        }
        const std::size_t top = std::min<std::size_t>(4, cands.size());
        std::partial_sort(cands.begin(), cands.begin() + top, cands.end(),
                          [](const Cand& x, const Cand& y) { return x.value > y.value; });
        double best = cands.front().value;
        for (std::size_t k = 0; k < top; ++k)
            best = std::max(best, climb(cands[k], 1.0 / kRadial, kPi / (kAngular - 1)));
        return best;
    }

    // compass search in (s, a) inside the half disk
    template <class C>
    double climb(const C& start, double ds, double da) const
    {
        double s = start.s, a = start.a, val = start.value;
        while (ds > 1e-7) {
            bool moved = false;
            const std::array<std::pair<double, double>, 4> steps{{{ds, 0}, {-ds, 0}, {0, da}, {0, -da}}};
            for (const auto& [es, ea] : steps) {
                const double s2 = std::clamp(s + es, 0.0, 1.0);
                const double a2 = std::clamp(a + ea, 0.0, kPi);
                const double v2 = at(s2, a2);
                if (v2 > val) {
                    s = s2;
                    a = a2;
                    val = v2;
                    moved = true;
                }
            }
            if (!moved) {
                ds *= 0.5;
                da *= 0.5;
            }
        }
        return val;
    }
};

}  // namespace

double distance_to_set(const RadialProfile& p, double rho, double z)
{
    return SetDistance(p)(std::abs(rho), z);
}

double r_out(const RadialProfile& p)
{
    const auto r = p.radii();
    const auto v = p.angles();
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.active(i))
            nodes.push_back(i);
    if (nodes.empty())
        return 0.0;
    // farthest closure point from t e; convex in t
    auto farthest = [&](double t) {
        double m = 0.0;
        for (std::size_t i : nodes) {
            const double d = t >= 0.0 ? std::sqrt(std::max(0.0, r[i] * r[i] + t * t - 2.0 * r[i] * t * std::cos(v[i])))
                                      : r[i] - t;
            m = std::max(m, d);
        }
        return m;
    };
    const double rm = p.r_max();
    const double t = golden_min(farthest, -rm, rm, 1e-13 * rm);
    const double m = std::min(farthest(t), farthest(0.0));
    return std::max(0.0, m - 1.0);
}

double r_in(const RadialProfile& p)
{
    const SetDistance dist(p);
    auto sup_at = [&](double t) { return HalfDiskSup{dist, t}(); };

    const double span = std::min(1.0, p.r_max());
    constexpr int kGrid = 9;
    std::vector<double> ts(kGrid);
    std::vector<double> vals(kGrid);
    for (int k = 0; k < kGrid; ++k) {
        ts[k] = span * (2.0 * k / (kGrid - 1) - 1.0);
        vals[k] = sup_at(ts[k]);
    }
    // first minimum wins ties; the grid is symmetric so t = 0 sits at the centre
    std::size_t kb = 0;
    for (std::size_t k = 1; k < vals.size(); ++k)
        if (vals[k] < vals[kb] || (vals[k] == vals[kb] && std::abs(ts[k]) < std::abs(ts[kb])))
            kb = k;
    const double lo = ts[kb == 0 ? 0 : kb - 1];
    const double hi = ts[std::min<std::size_t>(kb + 1, kGrid - 1)];
    const double tr = golden_min(sup_at, lo, hi, 1e-5);
    return std::min(vals[kb], sup_at(tr));
}

}  // namespace isodiam
