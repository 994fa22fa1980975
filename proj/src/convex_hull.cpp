#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

#include "isodiam/convex.hpp"

namespace isodiam {

namespace {

double cross2(const Vec2& o, const Vec2& a, const Vec2& b)
{
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 cross3(const Vec3& a, const Vec3& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm3(const Vec3& a) { return std::sqrt(dot3(a, a)); }

struct Face {
    int a, b, c;
    Vec3 normal;  ///< unit, outward
    double offset;
    bool alive = true;
};

Face make_face(const std::vector<Vec3>& p, int a, int b, int c, const Vec3& inside)
{
    Vec3 nrm = cross3(sub(p[b], p[a]), sub(p[c], p[a]));
    const double len = norm3(nrm);
    nrm = {nrm[0] / len, nrm[1] / len, nrm[2] / len};
    Face f{a, b, c, nrm, dot3(nrm, p[a])};
    if (dot3(nrm, inside) - f.offset > 0.0) {
        std::swap(f.b, f.c);
        f.normal = {-nrm[0], -nrm[1], -nrm[2]};
        f.offset = -f.offset;
    }
    return f;
}

Polytope hull_3d(const std::vector<Vec3>& p)
{
    const std::size_t m = p.size();
    double scale = 0.0;
    for (const auto& q : p)
        scale = std::max({scale, std::abs(q[0]), std::abs(q[1]), std::abs(q[2])});
    if (!(scale > 0.0))
        throw std::invalid_argument("convex_hull: all points coincide");
    const double eps = 1e-12 * scale;

    // initial simplex from extreme points
    std::size_t i0 = 0;
    for (std::size_t i = 1; i < m; ++i)
        if (p[i][0] < p[i0][0])
            i0 = i;
    std::size_t i1 = i0;
    double best = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double d = norm3(sub(p[i], p[i0]));
        if (d > best) {
            best = d;
            i1 = i;
        }
    }
    if (best <= eps)
        throw std::invalid_argument("convex_hull: all points coincide");
    const Vec3 dir = sub(p[i1], p[i0]);
    std::size_t i2 = i0;
    best = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double d = norm3(cross3(dir, sub(p[i], p[i0]))) / norm3(dir);
        if (d > best) {
            best = d;
            i2 = i;
        }
    }
    if (best <= eps)
        throw std::invalid_argument("convex_hull: points are collinear");
    Vec3 pn = cross3(dir, sub(p[i2], p[i0]));
    const double pl = norm3(pn);
    pn = {pn[0] / pl, pn[1] / pl, pn[2] / pl};
    std::size_t i3 = i0;
    best = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double d = std::abs(dot3(pn, sub(p[i], p[i0])));
        if (d > best) {
            best = d;
            i3 = i;
        }
    }
    if (best <= eps * 10.0)
        throw std::invalid_argument("convex_hull: points are coplanar");

    const int s[4] = {static_cast<int>(i0), static_cast<int>(i1), static_cast<int>(i2), static_cast<int>(i3)};
    Vec3 inside{0.0, 0.0, 0.0};
    for (int k : s)
        for (int c = 0; c < 3; ++c)
            inside[c] += 0.25 * p[k][c];

    std::vector<Face> faces;
    faces.push_back(make_face(p, s[0], s[1], s[2], inside));
    faces.push_back(make_face(p, s[0], s[1], s[3], inside));
    faces.push_back(make_face(p, s[0], s[2], s[3], inside));
    faces.push_back(make_face(p, s[1], s[2], s[3], inside));

    std::vector<std::size_t> visible;
    std::set<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < m; ++i) {
        if (i == i0 || i == i1 || i == i2 || i == i3)
            continue;
        visible.clear();
        for (std::size_t f = 0; f < faces.size(); ++f)
            if (faces[f].alive && dot3(faces[f].normal, p[i]) - faces[f].offset > eps)
                visible.push_back(f);
        if (visible.empty())
            continue;
        edges.clear();
        for (std::size_t f : visible) {
            const Face& fc = faces[f];
            edges.insert({fc.a, fc.b});
            edges.insert({fc.b, fc.c});
            edges.insert({fc.c, fc.a});
        }
        for (std::size_t f : visible)
            faces[f].alive = false;
        for (const auto& [a, b] : edges)
            if (!edges.count({b, a}))
                faces.push_back(make_face(p, a, b, static_cast<int>(i), inside));
    }

    std::vector<int> remap(m, -1);
    Polytope out;
    out.n = 3;
    for (const Face& f : faces) {
        if (!f.alive)
            continue;
        std::array<int, 3> tri{f.a, f.b, f.c};
        for (int& v : tri) {
            if (remap[v] < 0) {
                remap[v] = static_cast<int>(out.vertices.size());
                out.vertices.push_back({p[v][0], p[v][1], p[v][2]});
            }
            v = remap[v];
        }
        out.facets.push_back(tri);
    }
    return out;
}

}  // namespace

std::vector<Vec2> hull_2d(std::vector<Vec2> pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3)
        throw std::invalid_argument("hull_2d: fewer than 3 distinct points");
    std::vector<Vec2> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& q : pts) {
        while (k >= 2 && cross2(h[k - 2], h[k - 1], q) <= 0.0)
            --k;
        h[k++] = q;
    }
    for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
        while (k >= lo && cross2(h[k - 2], h[k - 1], pts[i]) <= 0.0)
            --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() < 3)
        throw std::invalid_argument("hull_2d: points are collinear");
    double ext = 0.0;
    for (const auto& q : h)
        ext = std::max({ext, std::abs(q[0]), std::abs(q[1])});
    if (!(polygon_area(h) > 1e-24 * ext * ext))
        throw std::invalid_argument("hull_2d: points are collinear");
    return h;
}

double polygon_area(std::span<const Vec2> poly)
{
    double s = 0.0;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++)
        s += poly[j][0] * poly[i][1] - poly[i][0] * poly[j][1];
    return 0.5 * s;
}

Polytope convex_hull(const std::vector<std::vector<double>>& points, int n)
{
    if (n != 2 && n != 3)
        throw std::invalid_argument("convex_hull: n must be 2 or 3");
    if (points.size() < static_cast<std::size_t>(n + 1))
        throw std::invalid_argument("convex_hull: need at least n + 1 points");
    for (const auto& q : points) {
        if (static_cast<int>(q.size()) != n)
            throw std::invalid_argument("convex_hull: point dimension mismatch");
        for (double x : q)
            if (!std::isfinite(x))
                throw std::invalid_argument("convex_hull: non-finite coordinate");
    }
    if (n == 2) {
        std::vector<Vec2> pts;
        pts.reserve(points.size());
        for (const auto& q : points)
            pts.push_back({q[0], q[1]});
        Polytope out;
        out.n = 2;
        for (const auto& q : hull_2d(std::move(pts)))
            out.vertices.push_back({q[0], q[1]});
        return out;
    }
    std::vector<Vec3> pts;
    pts.reserve(points.size());
    for (const auto& q : points)
        pts.push_back({q[0], q[1], q[2]});
    return hull_3d(pts);
}

double projection_measure(const Polytope& f, std::span<const double> nu)
{
    if (f.n == 2) {
        // width along nu
        double lo = 1e300, hi = -1e300;
        for (const auto& v : f.vertices) {
            const double s = v[0] * nu[0] + v[1] * nu[1];
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
        return hi - lo;
    }
    const Vec3 w{nu[0], nu[1], nu[2]};
    // orthonormal basis of the plane normal to nu
    const Vec3 helper = std::abs(w[0]) < 0.6 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
    Vec3 u = cross3(w, helper);
    const double ul = norm3(u);
    u = {u[0] / ul, u[1] / ul, u[2] / ul};
    const Vec3 t = cross3(w, u);
    std::vector<Vec2> proj;
    proj.reserve(f.vertices.size());
    for (const auto& v : f.vertices) {
        const Vec3 q{v[0], v[1], v[2]};
        proj.push_back({dot3(q, u), dot3(q, t)});
    }
    return polygon_area(hull_2d(std::move(proj)));
}

}  // namespace isodiam
