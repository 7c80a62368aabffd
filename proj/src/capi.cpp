#include "tritorus.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "probability.hpp"
#include "selfcheck.hpp"

using namespace tritorus;

struct tt_tau {
    TauParam value;
};

struct tt_polygon {
    ConvexPolygon value;
};

namespace {

thread_local std::string g_last_error;

tt_status fail(tt_status code, const char* msg) {
    g_last_error = msg;
    return code;
}

// Runs `fn`, translating exceptions into status codes.
template <class Fn>
tt_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const std::invalid_argument& e) {
        return fail(TT_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::runtime_error& e) {
        return fail(TT_ERR_NO_CONVERGENCE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(TT_ERR_INTERNAL, "out of memory");
    } catch (...) {
        return fail(TT_ERR_INTERNAL, "unexpected error");
    }
}

tt_estimate to_c(const Estimate& e) { return {e.mean, e.std_error, e.n, e.seed}; }

OverlapMethod to_method(tt_overlap_method method, long long budget) {
    return method == TT_OVERLAP_MONTE_CARLO ? OverlapMethod::monte_carlo(budget)
                                            : OverlapMethod::quadrature(budget);
}

tt_status run_moduli(double b_max, double tol, int include_tail, double* value,
                     long long* cells,
                     ModuliAverageResult (*op)(const ModuliAverageConfig&)) {
    if (!value) return fail(TT_ERR_INVALID_ARGUMENT, "value is NULL");
    return guarded([&] {
        const ModuliAverageResult r = op({b_max, tol, include_tail != 0});
        *value = r.value;
        if (cells) *cells = r.cells;
        if (!r.converged)
            return fail(TT_ERR_NO_CONVERGENCE, "cell budget exhausted; value is partial");
        return TT_OK;
    });
}

}  // namespace

extern "C" {

const char* tt_version(void) { return "1.0.0"; }

const char* tt_status_name(tt_status status) {
    switch (status) {
        case TT_OK: return "ok";
        case TT_ERR_INVALID_ARGUMENT: return "invalid argument";
        case TT_ERR_DOMAIN: return "outside fundamental domain";
        case TT_ERR_EMPTY: return "empty region";
        case TT_ERR_UNBOUNDED: return "unbounded region";
        case TT_ERR_NO_CONVERGENCE: return "no convergence";
        case TT_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* tt_last_error(void) { return g_last_error.c_str(); }

tt_status tt_tau_create(double a, double b, tt_tau** out) {
    if (!out) return fail(TT_ERR_INVALID_ARGUMENT, "out is NULL");
    *out = nullptr;
    if (!TauParam::is_in_domain(a, b))
        return fail(TT_ERR_DOMAIN, "tau outside the fundamental domain; reduce it first");
    return guarded([&] {
        *out = new tt_tau{TauParam::make(a, b)};
        return TT_OK;
    });
}

tt_status tt_tau_reduce(double a, double b, tt_tau** out, char* word, size_t word_cap) {
    if (!out) return fail(TT_ERR_INVALID_ARGUMENT, "out is NULL");
    *out = nullptr;
    return guarded([&] {
        ReducedTau red = reduce_to_fundamental(a, b);
        if (word && word_cap > 0) {
            const std::string w = red.word.str();
            std::strncpy(word, w.c_str(), word_cap - 1);
            word[word_cap - 1] = '\0';
        }
        *out = new tt_tau{red.tau};
        return TT_OK;
    });
}

void tt_tau_destroy(tt_tau* tau) { delete tau; }

tt_status tt_tau_get(const tt_tau* tau, double* a, double* b) {
    if (!tau || !a || !b) return fail(TT_ERR_INVALID_ARGUMENT, "NULL argument");
    *a = tau->value.a();
    *b = tau->value.b();
    return TT_OK;
}

int tt_tau_in_domain(double a, double b) { return TauParam::is_in_domain(a, b) ? 1 : 0; }

tt_status tt_tau_hex_params(const tt_tau* tau, double* s, double* t) {
    if (!tau || !s || !t) return fail(TT_ERR_INVALID_ARGUMENT, "NULL argument");
    const HexParams h = hex_params(tau->value);
    *s = h.s;
    *t = h.t;
    return TT_OK;
}

tt_status tt_polygon_create(const double* xy, int n_vertices, tt_polygon** out) {
    if (!xy || !out || n_vertices < 3)
        return fail(TT_ERR_INVALID_ARGUMENT, "need xy, out and at least 3 vertices");
    *out = nullptr;
    return guarded([&] {
        std::vector<Vec2> v;
        v.reserve(static_cast<std::size_t>(n_vertices));
        for (int i = 0; i < n_vertices; ++i) v.push_back({xy[2 * i], xy[2 * i + 1]});
        *out = new tt_polygon{ConvexPolygon::from_vertices(std::move(v))};
        return TT_OK;
    });
}

tt_status tt_polygon_unit_square(tt_polygon** out) {
    if (!out) return fail(TT_ERR_INVALID_ARGUMENT, "out is NULL");
    return guarded([&] {
        *out = new tt_polygon{unit_square()};
        return TT_OK;
    });
}

tt_status tt_polygon_corner_triangle(double s, double t, tt_polygon** out) {
    if (!out) return fail(TT_ERR_INVALID_ARGUMENT, "out is NULL");
    *out = nullptr;
    return guarded([&] {
        *out = new tt_polygon{corner_triangle(s, t)};
        return TT_OK;
    });
}

tt_status tt_polygon_notched_square(double s, double t, tt_polygon** out) {
    if (!out) return fail(TT_ERR_INVALID_ARGUMENT, "out is NULL");
    *out = nullptr;
    return guarded([&] {
        *out = new tt_polygon{notched_square(s, t)};
        return TT_OK;
    });
}

tt_status tt_polygon_minkowski_diff(const tt_polygon* p, const tt_polygon* q,
                                    tt_polygon** out) {
    if (!p || !q || !out) return fail(TT_ERR_INVALID_ARGUMENT, "NULL argument");
    *out = nullptr;
    if (p->value.is_empty() || q->value.is_empty())
        return fail(TT_ERR_EMPTY, "minkowski difference of an empty polygon");
    return guarded([&] {
        *out = new tt_polygon{minkowski_diff_convex(p->value, q->value)};
        return TT_OK;
    });
}

void tt_polygon_destroy(tt_polygon* p) { delete p; }

tt_status tt_polygon_area(const tt_polygon* p, double* out) {
    if (!p || !out) return fail(TT_ERR_INVALID_ARGUMENT, "NULL argument");
    *out = area(p->value);
    return TT_OK;
}

tt_status tt_polygon_size(const tt_polygon* p, int* out) {
    if (!p || !out) return fail(TT_ERR_INVALID_ARGUMENT, "NULL argument");
    *out = static_cast<int>(p->value.size());
    return TT_OK;
}

tt_status tt_polygon_vertices(const tt_polygon* p, double* xy, int cap_pairs,
                              int* written) {
    if (!p || !xy || !written || cap_pairs < 0)
        return fail(TT_ERR_INVALID_ARGUMENT, "NULL argument");
    const auto& v = p->value.vertices();
    const int n = static_cast<int>(v.size());
    const int m = n < cap_pairs ? n : cap_pairs;
    for (int i = 0; i < m; ++i) {
        xy[2 * i] = v[static_cast<std::size_t>(i)].x;
        xy[2 * i + 1] = v[static_cast<std::size_t>(i)].y;
    }
    *written = n;
    return TT_OK;
}

tt_status tt_dirichlet_domain(const tt_tau* tau, tt_polygon** hexagon, double* alpha,
                              double* beta) {
    if (!tau || !hexagon) return fail(TT_ERR_INVALID_ARGUMENT, "NULL argument");
    *hexagon = nullptr;
    return guarded([&] {
        DirichletDomain dom = dirichlet_domain(tau->value);
        if (alpha) *alpha = dom.alpha;
        if (beta) *beta = dom.beta;
        *hexagon = new tt_polygon{std::move(dom.hexagon)};
        return TT_OK;
    });
}

tt_status tt_overlap_numeric(const tt_polygon* a, const tt_polygon* b,
                             const tt_polygon* c, tt_overlap_method method,
                             long long budget, uint64_t seed, tt_estimate* out) {
    if (!a || !b || !c || !out) return fail(TT_ERR_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] {
        *out = to_c(f_numeric(a->value, b->value, c->value, to_method(method, budget), seed));
        return TT_OK;
    });
}

tt_status tt_overlap_qqq(double* out) {
    if (!out) return fail(TT_ERR_INVALID_ARGUMENT, "out is NULL");
    *out = f_qqq();
    return TT_OK;
}

#define TT_OVERLAP_CLOSED(name, fn)                                     \
    tt_status name(double s, double t, double* out) {                   \
        if (!out) return fail(TT_ERR_INVALID_ARGUMENT, "out is NULL");  \
        return guarded([&] {                                            \
            *out = fn(s, t);                                            \
            return TT_OK;                                               \
        });                                                             \
    }

TT_OVERLAP_CLOSED(tt_overlap_tqq, f_tqq)
TT_OVERLAP_CLOSED(tt_overlap_htt, f_htt)
TT_OVERLAP_CLOSED(tt_overlap_hht, f_hht)
TT_OVERLAP_CLOSED(tt_overlap_hhh, f_hhh)

#undef TT_OVERLAP_CLOSED

tt_status tt_p_closed_form(const tt_tau* tau, double* out) {
    if (!tau || !out) return fail(TT_ERR_INVALID_ARGUMENT, "NULL argument");
    *out = p_closed_form(tau->value);
    return TT_OK;
}

tt_status tt_p_from_hex(double s, double t, double* out) {
    if (!out) return fail(TT_ERR_INVALID_ARGUMENT, "out is NULL");
    return guarded([&] {
        *out = p_from_hex({s, t});
        return TT_OK;
    });
}

tt_status tt_p_monte_carlo(const tt_tau* tau, long long n, uint64_t seed, int workers,
                           tt_estimate* out) {
    if (!tau || !out) return fail(TT_ERR_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] {
        *out = to_c(p_monte_carlo(tau->value, n, seed, workers));
        return TT_OK;
    });
}

tt_status tt_classify_triangle(const tt_tau* tau, double u1, double v1, double u2,
                               double v2, double u3, double v3, long long* m,
                               long long* n) {
    if (!tau || !m || !n) return fail(TT_ERR_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] {
        const HomotopyClass h =
            classify_triangle(TorusPoint::wrap(u1, v1), TorusPoint::wrap(u2, v2),
                              TorusPoint::wrap(u3, v3), tau->value);
        *m = h.m;
        *n = h.n;
        return TT_OK;
    });
}

tt_status tt_moduli_average(double b_max, double tol, int include_tail, double* value,
                            long long* cells) {
    return run_moduli(b_max, tol, include_tail, value, cells, moduli_average);
}

tt_status tt_moduli_volume(double b_max, double tol, int include_tail, double* value,
                           long long* cells) {
    return run_moduli(b_max, tol, include_tail, value, cells, moduli_volume);
}

tt_status tt_extremes_scan(int grid_n, double* min_a, double* min_b, double* min_p,
                           double* max_a, double* max_b, double* max_p) {
    if (!min_a || !min_b || !min_p || !max_a || !max_b || !max_p)
        return fail(TT_ERR_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] {
        const ExtremesResult r = extremes_scan(grid_n);
        *min_a = r.min.tau.a();
        *min_b = r.min.tau.b();
        *min_p = r.min.value;
        *max_a = r.max.tau.a();
        *max_b = r.max.tau.b();
        *max_p = r.max.value;
        return TT_OK;
    });
}

tt_status tt_verify(tt_verify_budget budget, uint64_t seed, tt_verify_report_fn report,
                    void* user, int* failures) {
    if (!failures) return fail(TT_ERR_INVALID_ARGUMENT, "failures is NULL");
    return guarded([&] {
        int failed = 0;
        run_selfcheck(budget == TT_VERIFY_FULL ? VerifyBudget::full : VerifyBudget::quick,
                      seed, [&](const CheckResult& r) {
                          if (!r.ok) ++failed;
                          if (report) report(r.name.c_str(), r.ok ? 1 : 0,
                                             r.detail.c_str(), user);
                      });
        *failures = failed;
        return TT_OK;
    });
}

}  // extern "C"
