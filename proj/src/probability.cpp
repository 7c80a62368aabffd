#include "probability.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "quadrature.hpp"

namespace tritorus {

namespace {

double p_formula(double a, double b) {
    const double aa = std::fabs(a);
    const double b2 = b * b;
    const double b4 = b2 * b2;
    const double a2 = aa * aa;
    const double a3 = a2 * aa;
    return 9.0 / 16.0 + 3.0 * a2 / (8.0 * b2) - a3 / (2.0 * b2) - a3 / (2.0 * b4) +
           17.0 * a2 * a2 / (16.0 * b4) - a3 * a2 / (2.0 * b4);
}

}  // namespace

double p_closed_form(const TauParam& tau) { return p_formula(tau.a(), tau.b()); }

double p_from_hex(const HexParams& h) {
    const double denom = 1.0 - h.s * h.t;
    return f_hhh(h.s, h.t) / (denom * denom);
}

Estimate p_from_dirichlet(const TauParam& tau, const OverlapMethod& method,
                          std::uint64_t seed) {
    const DirichletDomain dom = dirichlet_domain(tau);
    const double a2 = area(dom.hexagon) * area(dom.hexagon);
    Estimate est = f_numeric(dom.hexagon, dom.hexagon, dom.hexagon, method, seed);
    est.mean /= a2;
    est.std_error /= a2;
    return est;
}

namespace {

long long count_trivial(const TauParam& tau, long long n, std::uint64_t seed,
                        std::uint64_t stream) {
    Rng rng(seed, stream);
    long long hits = 0;
    for (long long i = 0; i < n; ++i) {
        const TorusPoint x1 = sample_torus_point(rng, tau);
        const TorusPoint x2 = sample_torus_point(rng, tau);
        const TorusPoint x3 = sample_torus_point(rng, tau);
        if (classify_triangle(x1, x2, x3, tau).trivial()) ++hits;
    }
    return hits;
}

}  // namespace

Estimate p_monte_carlo(const TauParam& tau, long long n, std::uint64_t seed,
                       int workers) {
    if (n < 100) throw std::invalid_argument("p_monte_carlo: need n >= 100");
    if (workers < 1) throw std::invalid_argument("p_monte_carlo: need workers >= 1");

    long long hits = 0;
    if (workers == 1) {
        hits = count_trivial(tau, n, seed, 0);
    } else {
        std::vector<long long> partial(static_cast<std::size_t>(workers), 0);
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        const long long base = n / workers;
        const long long rem = n % workers;
        for (int w = 0; w < workers; ++w) {
            const long long nw = base + (w < rem ? 1 : 0);
            pool.emplace_back([&, w, nw] {
                partial[static_cast<std::size_t>(w)] =
                    count_trivial(tau, nw, seed, static_cast<std::uint64_t>(w));
            });
        }
        for (std::thread& th : pool) th.join();
        for (long long h : partial) hits += h;
    }

    const double p = static_cast<double>(hits) / static_cast<double>(n);
    const double se = std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(n));
    return {p, se, n, seed};
}

namespace {

struct Monomial {
    double coef;
    int a_pow;
    int b_pow;
};

// p_closed_form as a sum of coef * |a|^j / b^k.
constexpr Monomial kProbabilityTerms[] = {
    {9.0 / 16.0, 0, 0}, {3.0 / 8.0, 2, 2},   {-0.5, 3, 2},
    {-0.5, 3, 4},       {17.0 / 16.0, 4, 4}, {-0.5, 5, 4},
};
constexpr Monomial kUnitTerm[] = {{1.0, 0, 0}};

// Exact integral of sum coef * |a|^j / b^(k+2) over
// (a, b) in (-1/2, 1/2) x (b_max, infinity).
double analytic_tail(std::span<const Monomial> terms, double b_max) {
    double tail = 0.0;
    for (const Monomial& m : terms) {
        const double a_part = std::pow(0.5, m.a_pow) / (m.a_pow + 1);
        const double b_part = 1.0 / ((m.b_pow + 1) * std::pow(b_max, m.b_pow + 1));
        tail += m.coef * a_part * b_part;
    }
    return tail;
}

void validate_config(const ModuliAverageConfig& cfg) {
    if (!(cfg.b_max >= 10.0))
        throw std::invalid_argument("moduli average: b_max must be >= 10");
    if (!(cfg.tol > 0.0 && cfg.tol <= 1e-2))
        throw std::invalid_argument("moduli average: tol must lie in (0, 1e-2]");
}

// Integral of f(a,b)/b^2 over the truncated fundamental domain plus the
// analytic tail of `terms` above b_max.
ModuliAverageResult integrate_over_domain(const ModuliAverageConfig& cfg,
                                          const std::function<double(double, double)>& f,
                                          std::span<const Monomial> terms) {
    validate_config(cfg);
    ModuliAverageResult out;

    const double inner_tol = 0.05 * cfg.tol;
    auto column = [&](double a) {
        const double b_lo = TauParam::domain_floor(a);
        if (b_lo >= cfg.b_max) return 0.0;
        QuadratureResult inner = integrate_adaptive(
            [&](double b) { return f(a, b) / (b * b); }, b_lo, cfg.b_max, inner_tol);
        out.cells += inner.cells;
        if (!inner.converged) out.converged = false;
        return inner.value;
    };

    // split at a = 0: the integrand has an |a| crease there
    const double outer_tol = 0.225 * cfg.tol;
    for (const auto [lo, hi] : {std::pair{-0.5, 0.0}, std::pair{0.0, 0.5}}) {
        QuadratureResult part = integrate_adaptive(column, lo, hi, outer_tol);
        out.cells += part.cells;
        if (!part.converged) out.converged = false;
        out.value += part.value;
    }
    if (cfg.include_tail) out.value += analytic_tail(terms, cfg.b_max);
    return out;
}

constexpr double kModuliVolume = 1.0471975511965976;  // pi/3

}  // namespace

ModuliAverageResult moduli_average(const ModuliAverageConfig& cfg) {
    ModuliAverageResult r =
        integrate_over_domain(cfg, [](double a, double b) { return p_formula(a, b); },
                              kProbabilityTerms);
    r.value /= kModuliVolume;
    return r;
}

ModuliAverageResult moduli_volume(const ModuliAverageConfig& cfg) {
    return integrate_over_domain(cfg, [](double, double) { return 1.0; }, kUnitTerm);
}

ExtremesResult extremes_scan(int grid_n) {
    if (grid_n < 16) throw std::invalid_argument("extremes_scan: need grid_n >= 16");

    std::optional<Extreme> mn, mx;
    for (int i = 0; i < grid_n; ++i) {
        const double a = -0.5 + static_cast<double>(i + 1) / grid_n;
        const double b_lo = TauParam::domain_floor(a);
        const double b_hi = 3.0;
        for (int j = 0; j < grid_n; ++j) {
            const double b = b_lo + (b_hi - b_lo) * j / (grid_n - 1);
            if (!TauParam::is_in_domain(a, b)) continue;
            const TauParam tau = TauParam::make(a, b);
            const double p = p_closed_form(tau);
            if (!mn || p < mn->value) mn = Extreme{tau, p};
            if (!mx || p > mx->value) mx = Extreme{tau, p};
        }
    }
    return {*mn, *mx};
}

}  // namespace tritorus
