#pragma once

#include <cstdint>

#include "geom2d.hpp"

// The triple-overlap functional F(A,B,C) = integral over a in A of
// area(B intersect (C + a)): a generic numeric evaluator over convex
// polygons plus closed forms for the square / corner-triangle / notched
// square family.

namespace tritorus {

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;  // 0 for deterministic quadrature
    long long n = 1;         // samples or cells
    std::uint64_t seed = 0;  // 0 for deterministic
};

struct OverlapMethod {
    enum class Kind { monte_carlo, midpoint_quadrature };
    Kind kind = Kind::monte_carlo;
    long long budget = 200000;

    static OverlapMethod monte_carlo(long long budget) {
        return {Kind::monte_carlo, budget};
    }
    static OverlapMethod quadrature(long long budget) {
        return {Kind::midpoint_quadrature, budget};
    }
};

// Numeric evaluation of F(A,B,C). Monte Carlo samples a uniformly in A by
// rejection from its bounding box and reports mean and standard error;
// midpoint quadrature fans A into triangles from its centroid, subdivides
// to the budget and evaluates at barycenters (std_error = 0, n = cells).
// Any empty input gives an exact 0 with n = 1.
Estimate f_numeric(const ConvexPolygon& A, const ConvexPolygon& B,
                   const ConvexPolygon& C, const OverlapMethod& method,
                   std::uint64_t seed = 0);

// Closed forms; s and t must lie in [0, 1/2].
double f_qqq();                       // F(Q,Q,Q) = 9/16
double f_tqq(double s, double t);     // F(T,Q,Q) = st(3 + 2s + 2t + st)/24
double f_htt(double s, double t);     // F(H,T,T) = s^2 t^2 / 4
double f_hht(double s, double t);     // F(H,H,T) = st(3 + 2s + 2t - 11st)/24
double f_hhh(double s, double t);     // F(H,H,H) = 9/16 - 3st/4 - s^2t/2 - st^2/2 + 5s^2t^2/4

}  // namespace tritorus
