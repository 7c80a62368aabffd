#pragma once

#include <cstdint>

#include "overlap.hpp"
#include "torus.hpp"

// P(tau): the probability that three uniform points on the flat torus of
// shape tau span a homotopically trivial geodesic triangle.

namespace tritorus {

// Closed form, valid on the whole fundamental domain (even in a):
//   P = 9/16 + 3|a|^2/(8b^2) - |a|^3/(2b^2) - |a|^3/(2b^4)
//       + 17|a|^4/(16b^4) - |a|^5/(2b^4).
// The value always lies in [9/16, 7/12].
double p_closed_form(const TauParam& tau);

// P through the notched-square normal form: f_hhh(s,t) / (1 - s t)^2.
double p_from_hex(const HexParams& h);

// P as F(D,D,D)/area(D)^2 on the raw Dirichlet hexagon, evaluated
// numerically; mean and std_error are scaled by 1/area^2.
Estimate p_from_dirichlet(const TauParam& tau, const OverlapMethod& method,
                          std::uint64_t seed = 0);

// Direct simulation: n independent uniform triples, classified by summed
// lifted edge vectors. Sharded over `workers` substreams; the result is
// deterministic given (seed, workers). Requires n >= 100.
Estimate p_monte_carlo(const TauParam& tau, long long n, std::uint64_t seed,
                       int workers = 1);

struct ModuliAverageConfig {
    double b_max = 100.0;  // truncation height, >= 10
    double tol = 1e-6;     // absolute quadrature tolerance, in (0, 1e-2]
    bool include_tail = true;
};

struct ModuliAverageResult {
    double value = 0.0;
    long long cells = 0;
    bool converged = true;
};

// Average of P over the moduli space in the hyperbolic metric da db / b^2,
// normalized by vol = pi/3: adaptive quadrature up to b_max plus the exact
// per-monomial tail above it when include_tail is set.
ModuliAverageResult moduli_average(const ModuliAverageConfig& cfg);

// Self-check of the truncation scheme: the same quadrature and tail applied
// to the constant 1; the result should be pi/3.
ModuliAverageResult moduli_volume(const ModuliAverageConfig& cfg);

struct Extreme {
    TauParam tau;
    double value;
};

struct ExtremesResult {
    Extreme min;
    Extreme max;
};

// Grid scan of p_closed_form over the fundamental domain (a uniform,
// b from the lower boundary arc up to 3). Requires grid_n >= 16.
ExtremesResult extremes_scan(int grid_n);

}  // namespace tritorus
