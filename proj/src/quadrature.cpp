#include "quadrature.hpp"

#include <cmath>

namespace tritorus {

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1].
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWeightsK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWeightsG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double value;
    double error;
};

Panel gk15(const std::function<double(double)>& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    const double f_mid = f(mid);
    double k = kWeightsK[7] * f_mid;
    double g = kWeightsG[3] * f_mid;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kNodes[i];
        const double pair_sum = f(mid - dx) + f(mid + dx);
        k += kWeightsK[i] * pair_sum;
        if (i % 2 == 1) g += kWeightsG[i / 2] * pair_sum;
    }
    return {k * h, std::fabs(k - g) * h};
}

void recurse(const std::function<double(double)>& f, double lo, double hi,
             double tol, int depth, QuadratureResult& acc, long long max_cells) {
    if (!acc.converged) return;
    const Panel p = gk15(f, lo, hi);
    if (p.error <= tol || depth >= 48) {
        acc.value += p.value;
        acc.error_estimate += p.error;
        acc.cells += 1;
        if (depth >= 48 && p.error > tol) acc.converged = false;
        return;
    }
    if (acc.cells >= max_cells) {
        acc.value += p.value;
        acc.error_estimate += p.error;
        acc.cells += 1;
        acc.converged = false;
        return;
    }
    const double mid = 0.5 * (lo + hi);
    recurse(f, lo, mid, 0.5 * tol, depth + 1, acc, max_cells);
    recurse(f, mid, hi, 0.5 * tol, depth + 1, acc, max_cells);
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double lo, double hi, double tol,
                                    long long max_cells) {
    QuadratureResult acc;
    if (lo == hi) return acc;
    recurse(f, lo, hi, tol, 0, acc, max_cells);
    return acc;
}

}  // namespace tritorus
