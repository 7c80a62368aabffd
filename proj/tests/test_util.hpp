#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "geom2d.hpp"
#include "rng.hpp"
#include "torus.hpp"

namespace tritorus::testutil {

// Monotone-chain convex hull; independent oracle for the edge-merge
// Minkowski construction.
inline std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Vec2> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 1e-14)
            --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 1e-14)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

inline ConvexPolygon random_convex_polygon(Rng& rng) {
    const int n = 3 + static_cast<int>(rng.next_u64() % 6);
    const AffineMap g{rng.uniform(0.4, 1.6), rng.uniform(-0.6, 0.6),
                      rng.uniform(-0.6, 0.6), rng.uniform(0.4, 1.6),
                      rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    std::vector<Vec2> v;
    for (int i = 0; i < n; ++i) {
        const double th = 2.0 * 3.14159265358979323846 * i / n;
        v.push_back(g.apply({std::cos(th), std::sin(th)}));
    }
    return ConvexPolygon::from_vertices(std::move(v));
}

inline TauParam random_domain_tau(Rng& rng) {
    const double a = rng.uniform(-0.5 + 1e-9, 0.5);
    const double b = rng.uniform(TauParam::domain_floor(a) + 1e-9, 3.0);
    return TauParam::make(a, b);
}

// Smallest, over cyclic alignments, of the largest vertexwise distance.
inline double max_cyclic_vertex_distance(const ConvexPolygon& p, const ConvexPolygon& q) {
    if (p.size() != q.size()) return std::numeric_limits<double>::infinity();
    const std::size_t n = p.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            worst = std::max(worst, norm(p.vertex(i) - q.vertex((i + k) % n)));
        best = std::min(best, worst);
    }
    return best;
}

}  // namespace tritorus::testutil
