#include "isodiam/reuleaux.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "isodiam/geomcore.hpp"

namespace isodiam {

double ReuleauxShape::circumradius() const
{
    return d / (2.0 * std::cos(kPi / (2.0 * k)));
}

ReuleauxShape reuleaux(int k, double d)
{
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("reuleaux: k must be odd and at least 3");
    if (!(d > 0.0))
        throw std::invalid_argument("reuleaux: width must be positive");
    ReuleauxShape s;
    s.k = k;
    s.d = d;
    const double R = s.circumradius();
    for (int j = 0; j < k; ++j) {
        const double a = 2.0 * kPi * j / k;
        s.vertices.push_back({R * std::cos(a), R * std::sin(a)});
    }
    for (int m = 0; m < k; ++m) {
        const Vec2 c = s.vertices[(m + (k + 1) / 2) % k];
        const Vec2& p = s.vertices[m];
        ReuleauxArc arc;
        arc.center = c;
        arc.start = std::atan2(p[1] - c[1], p[0] - c[0]);
        arc.end = arc.start + kPi / k;
        s.arcs.push_back(arc);
    }
    return s;
}

double reuleaux_perimeter(const ReuleauxShape& s)
{
    double total = 0.0;
    for (const auto& a : s.arcs)
        total += s.d * (a.end - a.start);
    return total;
}

std::vector<Vec2> reuleaux_polygon(const ReuleauxShape& s, int samples)
{
    if (samples < s.k)
        throw std::invalid_argument("reuleaux_polygon: fewer samples than arcs");
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int m = 0; m < s.k; ++m) {
        // arc m owns its start point; the end point is the next arc's start
        const int count = samples / s.k + (m < samples % s.k ? 1 : 0);
        const ReuleauxArc& a = s.arcs[static_cast<std::size_t>(m)];
        pts.push_back(s.vertices[static_cast<std::size_t>(m)]);
        for (int i = 1; i < count; ++i) {
            const double ang = a.start + (a.end - a.start) * i / count;
            pts.push_back({a.center[0] + s.d * std::cos(ang), a.center[1] + s.d * std::sin(ang)});
        }
    }
    return pts;
}

double reuleaux_support(const ReuleauxShape& s, double phi)
{
    const double ux = std::cos(phi), uy = std::sin(phi);
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : s.vertices)
        best = std::max(best, v[0] * ux + v[1] * uy);
    for (const auto& a : s.arcs) {
        // the arc attains c.u + d when u points inside its angular range
        double rel = std::remainder(phi - a.start, 2.0 * kPi);
        if (rel < 0.0)
            rel += 2.0 * kPi;
        if (rel <= a.end - a.start)
            best = std::max(best, a.center[0] * ux + a.center[1] * uy + s.d);
    }
    return best;
}

}  // namespace isodiam
