#include "overlap.hpp"

#include <cmath>
#include <stdexcept>

#include "rng.hpp"

namespace tritorus {

namespace {

void require_legs(double s, double t, const char* who) {
    if (!(s >= 0.0 && s <= 0.5 && t >= 0.0 && t <= 0.5))
        throw std::invalid_argument(std::string(who) + ": s, t must lie in [0, 1/2]");
}

Estimate f_monte_carlo(const ConvexPolygon& A, const ConvexPolygon& B,
                       const ConvexPolygon& C, long long budget,
                       std::uint64_t seed) {
    const Box box = bounding_box(A);
    const double area_a = area(A);
    Rng rng(seed);

    double sum = 0.0, sum_sq = 0.0;
    for (long long i = 0; i < budget; ++i) {
        Vec2 pt;
        do {
            pt = {rng.uniform(box.lo.x, box.hi.x), rng.uniform(box.lo.y, box.hi.y)};
        } while (!contains_point(A, pt));
        const double g = intersection_area_shifted(B, C, pt);
        sum += g;
        sum_sq += g * g;
    }
    const double nd = static_cast<double>(budget);
    const double mean_g = sum / nd;
    const double var_g = std::max(0.0, (sum_sq - nd * mean_g * mean_g) / (nd - 1.0));
    return {area_a * mean_g, area_a * std::sqrt(var_g / nd), budget, seed};
}

Estimate f_quadrature(const ConvexPolygon& A, const ConvexPolygon& B,
                      const ConvexPolygon& C, long long budget) {
    const Vec2 c = centroid(A);
    const auto& v = A.vertices();
    const std::size_t ntri = v.size();
    const long long k = std::max<long long>(
        1, static_cast<long long>(
               std::ceil(std::sqrt(static_cast<double>(budget) / static_cast<double>(ntri)))));
    const double inv_k = 1.0 / static_cast<double>(k);

    double total = 0.0;
    long long cells = 0;
    for (std::size_t e = 0; e < ntri; ++e) {
        const Vec2 p0 = c;
        const Vec2 d1 = v[e] - c;
        const Vec2 d2 = v[(e + 1) % ntri] - c;
        const double tri_area = 0.5 * cross(d1, d2);
        const double w = tri_area * inv_k * inv_k;
        auto eval = [&](double bx, double by) {
            const Vec2 pt = p0 + bx * d1 + by * d2;
            total += w * intersection_area_shifted(B, C, pt);
            ++cells;
        };
        for (long long i = 0; i < k; ++i) {
            for (long long j = 0; j < k - i; ++j) {
                eval((3 * i + 1) / (3.0 * k), (3 * j + 1) / (3.0 * k));
                if (i + j <= k - 2) eval((3 * i + 2) / (3.0 * k), (3 * j + 2) / (3.0 * k));
            }
        }
    }
    return {total, 0.0, cells, 0};
}

}  // namespace

Estimate f_numeric(const ConvexPolygon& A, const ConvexPolygon& B,
                   const ConvexPolygon& C, const OverlapMethod& method,
                   std::uint64_t seed) {
    if (method.budget < 10)
        throw std::invalid_argument("f_numeric: budget must be at least 10");
    if (A.is_empty() || B.is_empty() || C.is_empty()) return {0.0, 0.0, 1, seed};
    if (method.kind == OverlapMethod::Kind::monte_carlo)
        return f_monte_carlo(A, B, C, method.budget, seed);
    return f_quadrature(A, B, C, method.budget);
}

double f_qqq() { return 9.0 / 16.0; }

double f_tqq(double s, double t) {
    require_legs(s, t, "f_tqq");
    return s * t / 24.0 * (3.0 + 2.0 * s + 2.0 * t + s * t);
}

double f_htt(double s, double t) {
    require_legs(s, t, "f_htt");
    return 0.25 * s * s * t * t;
}

double f_hht(double s, double t) {
    require_legs(s, t, "f_hht");
    return s * t / 24.0 * (3.0 + 2.0 * s + 2.0 * t - 11.0 * s * t);
}

double f_hhh(double s, double t) {
    require_legs(s, t, "f_hhh");
    const double st = s * t;
    return 9.0 / 16.0 - 0.75 * st - 0.5 * s * st - 0.5 * t * st + 1.25 * st * st;
}

}  // namespace tritorus
