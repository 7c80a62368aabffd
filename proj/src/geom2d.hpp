#pragma once

#include <cstddef>
#include <span>
#include <vector>

// Planar primitives: vectors, affine maps, convex polygons, clipping,
// half-plane intersection and Minkowski difference. Everything is value
// semantics and pure functions; coordinates are doubles and all routines
// assume desk-scale inputs (|x| up to a few thousand).

namespace tritorus {

// Absolute tolerance for on-edge classification and vertex deduplication.
inline constexpr double kGeomEps = 1e-12;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double norm(Vec2 a);
constexpr double norm2(Vec2 a) { return a.x * a.x + a.y * a.y; }

// Affine map x -> L x + t with L = [[m11 m12][m21 m22]].
struct AffineMap {
    double m11 = 1.0, m12 = 0.0;
    double m21 = 0.0, m22 = 1.0;
    double tx = 0.0, ty = 0.0;

    static AffineMap identity() { return {}; }
    static AffineMap translation(Vec2 w) { return {1.0, 0.0, 0.0, 1.0, w.x, w.y}; }
    static AffineMap linear(double a11, double a12, double a21, double a22) {
        return {a11, a12, a21, a22, 0.0, 0.0};
    }
    static AffineMap scaling(double s) { return {s, 0.0, 0.0, s, 0.0, 0.0}; }

    Vec2 apply(Vec2 v) const {
        return {m11 * v.x + m12 * v.y + tx, m21 * v.x + m22 * v.y + ty};
    }
    double det() const { return m11 * m22 - m12 * m21; }
    bool unimodular(double tol = 1e-12) const;
    AffineMap inverse() const;  // throws std::invalid_argument if degenerate
};

// Composition: (g * h)(x) = g(h(x)).
AffineMap operator*(const AffineMap& g, const AffineMap& h);

// Convex polygon with counterclockwise vertices, or the empty sentinel.
// Construction normalizes orientation, merges vertices closer than kGeomEps
// and collapses anything of area below kGeomEps to the empty sentinel.
// Inputs that are not convex up to tolerance are rejected.
class ConvexPolygon {
  public:
    ConvexPolygon() = default;  // empty sentinel

    static ConvexPolygon from_vertices(std::vector<Vec2> vertices);
    static ConvexPolygon empty() { return {}; }

    bool is_empty() const { return verts_.empty(); }
    std::size_t size() const { return verts_.size(); }
    const std::vector<Vec2>& vertices() const { return verts_; }
    Vec2 vertex(std::size_t i) const { return verts_[i]; }

  private:
    std::vector<Vec2> verts_;
};

struct Box {
    Vec2 lo;
    Vec2 hi;
};

// Half-plane {x : dot(normal, x) <= offset}.
struct HalfPlane {
    Vec2 normal;
    double offset = 0.0;
};

struct HalfPlaneResult {
    enum class Status { ok, empty, unbounded };
    Status status = Status::empty;
    ConvexPolygon polygon;
};

double area(const ConvexPolygon& p);
Vec2 centroid(const ConvexPolygon& p);
Box bounding_box(const ConvexPolygon& p);
bool contains_point(const ConvexPolygon& p, Vec2 q, double tol = kGeomEps);

ConvexPolygon translate(const ConvexPolygon& p, Vec2 w);
ConvexPolygon apply_affine(const AffineMap& g, const ConvexPolygon& p);
ConvexPolygon clip_halfplane(const ConvexPolygon& p, const HalfPlane& h);
ConvexPolygon intersect_convex(const ConvexPolygon& p, const ConvexPolygon& q);
HalfPlaneResult halfplane_intersection(std::span<const HalfPlane> planes);
ConvexPolygon minkowski_diff_convex(const ConvexPolygon& p, const ConvexPolygon& q);

// Area of p intersected with (q translated by w), allocation-free.
// Equals area(intersect_convex(p, translate(q, w))) up to tolerance collapse;
// kept separate because it sits in Monte Carlo inner loops.
double intersection_area_shifted(const ConvexPolygon& p, const ConvexPolygon& q, Vec2 w);

// Unit square [-1/2,1/2]^2.
ConvexPolygon unit_square();
// Right triangle cut from the upper-left corner of the unit square:
// horizontal leg s along the top edge, vertical leg t down the left edge.
ConvexPolygon corner_triangle(double s, double t);
// Unit square with the corner triangle of legs (s,t) and its point
// reflection removed; area 1 - s*t.
ConvexPolygon notched_square(double s, double t);

}  // namespace tritorus
