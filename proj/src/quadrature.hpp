#pragma once

#include <functional>

namespace tritorus {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long long cells = 0;  // leaf intervals used
    bool converged = true;
};

// Adaptive Gauss-Kronrod 7-15 on [lo, hi] to absolute tolerance `tol`.
// Bisection stops once the local error estimate fits within the local
// share of the budget; `max_cells` bounds the total leaf count, and the
// partial value is returned with converged = false when it is exhausted.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double lo, double hi, double tol,
                                    long long max_cells = 200000);

}  // namespace tritorus
