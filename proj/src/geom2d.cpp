#include "geom2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tritorus {

namespace {

constexpr double kHalfPlaneBoxHalfWidth = 1e4;

double polygon_scale(std::span<const Vec2> v) {
    double s = 1.0;
    for (const Vec2& p : v) s = std::max({s, std::fabs(p.x), std::fabs(p.y)});
    return s;
}

double shoelace_signed(std::span<const Vec2> v) {
    double sum = 0.0;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % n];
        sum += cross(a, b);
    }
    return 0.5 * sum;
}

// Clip a vertex ring against {x : dot(n,x) <= c}, n unit length.
// Writes to `out`, returns the output count. `out` must not alias `in`.
std::size_t clip_ring(const Vec2* in, std::size_t n, Vec2 n_unit, double c,
                      Vec2* out) {
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 s = in[i];
        const Vec2 e = in[(i + 1) % n];
        const double ds = dot(n_unit, s) - c;
        const double de = dot(n_unit, e) - c;
        const bool ins = ds <= kGeomEps;
        const bool ine = de <= kGeomEps;
        if (ins != ine) {
            const double t = ds / (ds - de);
            out[m++] = {s.x + t * (e.x - s.x), s.y + t * (e.y - s.y)};
        }
        if (ine) out[m++] = e;
    }
    return m;
}

std::size_t dedup_ring(Vec2* v, std::size_t n) {
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 prev = m == 0 ? v[n - 1] : v[m - 1];
        if (m == 0 || norm(v[i] - prev) > kGeomEps) v[m++] = v[i];
    }
    while (m > 1 && norm(v[m - 1] - v[0]) <= kGeomEps) --m;
    return m;
}

}  // namespace

double norm(Vec2 a) { return std::hypot(a.x, a.y); }

bool AffineMap::unimodular(double tol) const { return std::fabs(det() - 1.0) <= tol; }

AffineMap AffineMap::inverse() const {
    const double d = det();
    if (std::fabs(d) < 1e-15) throw std::invalid_argument("AffineMap::inverse: degenerate map");
    const double i11 = m22 / d, i12 = -m12 / d, i21 = -m21 / d, i22 = m11 / d;
    return {i11, i12, i21, i22, -(i11 * tx + i12 * ty), -(i21 * tx + i22 * ty)};
}

AffineMap operator*(const AffineMap& g, const AffineMap& h) {
    AffineMap r;
    r.m11 = g.m11 * h.m11 + g.m12 * h.m21;
    r.m12 = g.m11 * h.m12 + g.m12 * h.m22;
    r.m21 = g.m21 * h.m11 + g.m22 * h.m21;
    r.m22 = g.m21 * h.m12 + g.m22 * h.m22;
    const Vec2 t = g.apply({h.tx, h.ty});
    r.tx = t.x;
    r.ty = t.y;
    return r;
}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<Vec2> vertices) {
    for (const Vec2& v : vertices) {
        if (!std::isfinite(v.x) || !std::isfinite(v.y))
            throw std::invalid_argument("ConvexPolygon: non-finite vertex");
    }
    if (vertices.size() >= 2) {
        const std::size_t m = dedup_ring(vertices.data(), vertices.size());
        vertices.resize(m);
    }
    if (vertices.size() < 3) return {};

    const double signed_area = shoelace_signed(vertices);
    if (signed_area < 0.0) std::reverse(vertices.begin(), vertices.end());
    if (std::fabs(signed_area) < kGeomEps) return {};

    const double scale = polygon_scale(vertices);
    const double tol = 1e-9 * scale * scale;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e1 = vertices[(i + 1) % n] - vertices[i];
        const Vec2 e2 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
        if (cross(e1, e2) < -tol)
            throw std::invalid_argument("ConvexPolygon: vertices are not convex");
    }

    ConvexPolygon p;
    p.verts_ = std::move(vertices);
    return p;
}

double area(const ConvexPolygon& p) {
    if (p.is_empty()) return 0.0;
    return shoelace_signed(p.vertices());
}

Vec2 centroid(const ConvexPolygon& p) {
    if (p.is_empty()) throw std::invalid_argument("centroid: empty polygon");
    const auto& v = p.vertices();
    const std::size_t n = v.size();
    double a6 = 0.0;
    Vec2 c{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& s = v[i];
        const Vec2& e = v[(i + 1) % n];
        const double w = cross(s, e);
        a6 += w;
        c.x += w * (s.x + e.x);
        c.y += w * (s.y + e.y);
    }
    return {c.x / (3.0 * a6), c.y / (3.0 * a6)};
}

Box bounding_box(const ConvexPolygon& p) {
    if (p.is_empty()) throw std::invalid_argument("bounding_box: empty polygon");
    Box b{p.vertex(0), p.vertex(0)};
    for (const Vec2& v : p.vertices()) {
        b.lo.x = std::min(b.lo.x, v.x);
        b.lo.y = std::min(b.lo.y, v.y);
        b.hi.x = std::max(b.hi.x, v.x);
        b.hi.y = std::max(b.hi.y, v.y);
    }
    return b;
}

bool contains_point(const ConvexPolygon& p, Vec2 q, double tol) {
    if (p.is_empty()) return false;
    const auto& v = p.vertices();
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e = v[(i + 1) % n] - v[i];
        if (cross(e, q - v[i]) < -tol * std::max(1.0, norm(e))) return false;
    }
    return true;
}

ConvexPolygon translate(const ConvexPolygon& p, Vec2 w) {
    if (p.is_empty()) return {};
    std::vector<Vec2> out;
    out.reserve(p.size());
    for (const Vec2& v : p.vertices()) out.push_back(v + w);
    return ConvexPolygon::from_vertices(std::move(out));
}

ConvexPolygon apply_affine(const AffineMap& g, const ConvexPolygon& p) {
    if (std::fabs(g.det()) < 1e-12)
        throw std::invalid_argument("apply_affine: degenerate map");
    if (p.is_empty()) return {};
    std::vector<Vec2> out;
    out.reserve(p.size());
    for (const Vec2& v : p.vertices()) out.push_back(g.apply(v));
    // from_vertices restores counterclockwise order when det(g) < 0
    return ConvexPolygon::from_vertices(std::move(out));
}

ConvexPolygon clip_halfplane(const ConvexPolygon& p, const HalfPlane& h) {
    if (p.is_empty()) return {};
    const double len = norm(h.normal);
    if (len < 1e-15) throw std::invalid_argument("clip_halfplane: zero normal");
    const Vec2 n{h.normal.x / len, h.normal.y / len};
    const double c = h.offset / len;

    std::vector<Vec2> out(p.size() * 2 + 4);
    const std::size_t m = clip_ring(p.vertices().data(), p.size(), n, c, out.data());
    out.resize(m);
    return ConvexPolygon::from_vertices(std::move(out));
}

ConvexPolygon intersect_convex(const ConvexPolygon& p, const ConvexPolygon& q) {
    if (p.is_empty() || q.is_empty()) return {};
    ConvexPolygon cur = p;
    const auto& qv = q.vertices();
    const std::size_t nq = qv.size();
    for (std::size_t i = 0; i < nq && !cur.is_empty(); ++i) {
        const Vec2 a = qv[i];
        const Vec2 e = qv[(i + 1) % nq] - a;
        const Vec2 n{e.y, -e.x};  // outward normal of a CCW edge
        cur = clip_halfplane(cur, HalfPlane{n, dot(n, a)});
    }
    return cur;
}

HalfPlaneResult halfplane_intersection(std::span<const HalfPlane> planes) {
    const double B = kHalfPlaneBoxHalfWidth;
    ConvexPolygon cur = ConvexPolygon::from_vertices(
        {{-B, -B}, {B, -B}, {B, B}, {-B, B}});
    for (const HalfPlane& h : planes) {
        cur = clip_halfplane(cur, h);
        if (cur.is_empty()) return {HalfPlaneResult::Status::empty, {}};
    }
    for (const Vec2& v : cur.vertices()) {
        if (std::fabs(v.x) > B - 1.0 || std::fabs(v.y) > B - 1.0)
            return {HalfPlaneResult::Status::unbounded, {}};
    }
    return {HalfPlaneResult::Status::ok, std::move(cur)};
}

namespace {

std::size_t bottommost(const std::vector<Vec2>& v) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i].y < v[k].y || (v[i].y == v[k].y && v[i].x < v[k].x)) k = i;
    }
    return k;
}

int angle_half(Vec2 d) { return (d.y < 0.0 || (d.y == 0.0 && d.x < 0.0)) ? 1 : 0; }

// Strict order of edge directions by polar angle in [0, 2pi).
bool angle_less(Vec2 a, Vec2 b) {
    const int ha = angle_half(a), hb = angle_half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0.0;
}

}  // namespace

ConvexPolygon minkowski_diff_convex(const ConvexPolygon& p, const ConvexPolygon& q) {
    if (p.is_empty() || q.is_empty())
        throw std::invalid_argument("minkowski_diff_convex: empty input");

    // p (-) q = p (+) (-q). Point reflection keeps the ring counterclockwise.
    std::vector<Vec2> qr;
    qr.reserve(q.size());
    for (const Vec2& v : q.vertices()) qr.push_back(-v);

    const std::vector<Vec2>& pv = p.vertices();
    const std::size_t np = pv.size(), nq = qr.size();
    const std::size_t ip0 = bottommost(pv), iq0 = bottommost(qr);

    std::vector<Vec2> out;
    out.reserve(np + nq);
    Vec2 cur = pv[ip0] + qr[iq0];
    std::size_t i = 0, j = 0;
    while (i < np || j < nq) {
        out.push_back(cur);
        const Vec2 ep = pv[(ip0 + i + 1) % np] - pv[(ip0 + i) % np];
        const Vec2 eq = qr[(iq0 + j + 1) % nq] - qr[(iq0 + j) % nq];
        if (j == nq) {
            cur = cur + ep;
            ++i;
        } else if (i == np) {
            cur = cur + eq;
            ++j;
        } else if (angle_less(ep, eq)) {
            cur = cur + ep;
            ++i;
        } else if (angle_less(eq, ep)) {
            cur = cur + eq;
            ++j;
        } else {  // parallel edges advance together
            cur = cur + ep + eq;
            ++i;
            ++j;
        }
    }
    return ConvexPolygon::from_vertices(std::move(out));
}

double intersection_area_shifted(const ConvexPolygon& p, const ConvexPolygon& q, Vec2 w) {
    if (p.is_empty() || q.is_empty()) return 0.0;

    constexpr std::size_t kCap = 64;
    Vec2 buf_a[kCap], buf_b[kCap];
    const auto& pv = p.vertices();
    std::size_t n = pv.size();
    if (n + q.size() * 2 + 4 > kCap)
        return area(intersect_convex(p, translate(q, w)));
    std::copy(pv.begin(), pv.end(), buf_a);
    Vec2* in = buf_a;
    Vec2* out = buf_b;

    const auto& qv = q.vertices();
    const std::size_t nq = qv.size();
    for (std::size_t i = 0; i < nq; ++i) {
        const Vec2 a = qv[i] + w;
        const Vec2 e = qv[(i + 1) % nq] - qv[i];
        const double len = norm(e);
        const Vec2 nrm{e.y / len, -e.x / len};
        n = clip_ring(in, n, nrm, dot(nrm, a), out);
        std::swap(in, out);
        if (n < 3) return 0.0;
    }
    const double val = shoelace_signed(std::span<const Vec2>(in, n));
    return val < kGeomEps ? 0.0 : val;
}

ConvexPolygon unit_square() {
    return ConvexPolygon::from_vertices(
        {{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}});
}

ConvexPolygon corner_triangle(double s, double t) {
    if (!(s >= 0.0 && s <= 0.5 && t >= 0.0 && t <= 0.5))
        throw std::invalid_argument("corner_triangle: legs must lie in [0, 1/2]");
    return ConvexPolygon::from_vertices(
        {{-0.5, 0.5}, {-0.5, 0.5 - t}, {-0.5 + s, 0.5}});
}

ConvexPolygon notched_square(double s, double t) {
    if (!(s >= 0.0 && s <= 0.5 && t >= 0.0 && t <= 0.5))
        throw std::invalid_argument("notched_square: legs must lie in [0, 1/2]");
    return ConvexPolygon::from_vertices({{0.5, 0.5},
                                         {-0.5 + s, 0.5},
                                         {-0.5, 0.5 - t},
                                         {-0.5, -0.5},
                                         {0.5 - s, -0.5},
                                         {0.5, -0.5 + t}});
}

}  // namespace tritorus
