/* tritorus: homotopy statistics of random geodesic triangles on flat tori.
 *
 * C API of the shared library. All functions return tt_status; outputs are
 * written through pointers. Handles are opaque and must be released with
 * their destroy function. tt_last_error() describes the most recent failure
 * on the calling thread.
 */
#ifndef TRITORUS_H
#define TRITORUS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TT_API __declspec(dllexport)
#else
#define TT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tt_status {
    TT_OK = 0,
    TT_ERR_INVALID_ARGUMENT = 1, /* bad parameter or precondition violation */
    TT_ERR_DOMAIN = 2,           /* tau outside the fundamental domain */
    TT_ERR_EMPTY = 3,            /* empty region where one was required */
    TT_ERR_UNBOUNDED = 4,        /* unbounded half-plane intersection */
    TT_ERR_NO_CONVERGENCE = 5,   /* iteration or cell budget exhausted */
    TT_ERR_INTERNAL = 6
} tt_status;

/* Torus shape a + ib in the fundamental domain
 * a in (-1/2, 1/2], b > sqrt(1 - a^2) (boundary arc kept for a >= 0). */
typedef struct tt_tau tt_tau;

/* Convex polygon with counterclockwise vertices, possibly empty. */
typedef struct tt_polygon tt_polygon;

typedef struct tt_estimate {
    double mean;
    double std_error; /* 0 for deterministic quadrature */
    long long n;      /* samples or cells */
    uint64_t seed;    /* 0 for deterministic */
} tt_estimate;

typedef enum tt_overlap_method {
    TT_OVERLAP_MONTE_CARLO = 0,
    TT_OVERLAP_MIDPOINT_QUADRATURE = 1
} tt_overlap_method;

TT_API const char* tt_version(void);
TT_API const char* tt_status_name(tt_status status);
/* Message for the last failure on this thread; empty string if none. */
TT_API const char* tt_last_error(void);

/* ---- torus shapes ---- */

TT_API tt_status tt_tau_create(double a, double b, tt_tau** out);
/* Modular reduction of an arbitrary a + ib (b > 0) into the fundamental
 * domain. `word`, when non-NULL, receives the generator word applied
 * ('T^k' is tau -> tau + k, 'S' is tau -> -1/tau), NUL-terminated and
 * truncated to word_cap. */
TT_API tt_status tt_tau_reduce(double a, double b, tt_tau** out, char* word,
                               size_t word_cap);
TT_API void tt_tau_destroy(tt_tau* tau);
TT_API tt_status tt_tau_get(const tt_tau* tau, double* a, double* b);
TT_API int tt_tau_in_domain(double a, double b);
/* Notched-square legs: s = |a|, t = |a| / (a^2 + b^2). */
TT_API tt_status tt_tau_hex_params(const tt_tau* tau, double* s, double* t);

/* ---- polygons ---- */

/* xy is x0,y0,x1,y1,...; n_vertices >= 3. Vertices may be in either
 * orientation; they are normalized to counterclockwise. */
TT_API tt_status tt_polygon_create(const double* xy, int n_vertices, tt_polygon** out);
TT_API tt_status tt_polygon_unit_square(tt_polygon** out);
TT_API tt_status tt_polygon_corner_triangle(double s, double t, tt_polygon** out);
TT_API tt_status tt_polygon_notched_square(double s, double t, tt_polygon** out);
/* Minkowski difference {u - v : u in p, v in q}. */
TT_API tt_status tt_polygon_minkowski_diff(const tt_polygon* p, const tt_polygon* q,
                                           tt_polygon** out);
TT_API void tt_polygon_destroy(tt_polygon* p);
TT_API tt_status tt_polygon_area(const tt_polygon* p, double* out);
TT_API tt_status tt_polygon_size(const tt_polygon* p, int* out);
/* Writes up to cap_pairs (x,y) pairs; *written gets the vertex count. */
TT_API tt_status tt_polygon_vertices(const tt_polygon* p, double* xy, int cap_pairs,
                                     int* written);

/* Dirichlet domain of the lattice <1, tau>: centrally symmetric hexagon of
 * area b (a rectangle when a = 0), with vertex heights alpha and beta. */
TT_API tt_status tt_dirichlet_domain(const tt_tau* tau, tt_polygon** hexagon,
                                     double* alpha, double* beta);

/* ---- overlap functional F(A,B,C) = int_{a in A} area(B & (C + a)) ---- */

TT_API tt_status tt_overlap_numeric(const tt_polygon* a, const tt_polygon* b,
                                    const tt_polygon* c, tt_overlap_method method,
                                    long long budget, uint64_t seed, tt_estimate* out);
/* Closed forms for the square / corner-triangle / notched-square family;
 * s and t must lie in [0, 1/2]. */
TT_API tt_status tt_overlap_qqq(double* out);
TT_API tt_status tt_overlap_tqq(double s, double t, double* out);
TT_API tt_status tt_overlap_htt(double s, double t, double* out);
TT_API tt_status tt_overlap_hht(double s, double t, double* out);
TT_API tt_status tt_overlap_hhh(double s, double t, double* out);

/* ---- triangle triviality probability ---- */

TT_API tt_status tt_p_closed_form(const tt_tau* tau, double* out);
TT_API tt_status tt_p_from_hex(double s, double t, double* out);
/* n >= 100; sharded over `workers` deterministic substreams. */
TT_API tt_status tt_p_monte_carlo(const tt_tau* tau, long long n, uint64_t seed,
                                  int workers, tt_estimate* out);

/* Homotopy class (m, n) of the triangle on x1, x2, x3 given in lattice
 * coordinates (u, v) in [0,1)^2; (0,0) means homotopically trivial. */
TT_API tt_status tt_classify_triangle(const tt_tau* tau, double u1, double v1,
                                      double u2, double v2, double u3, double v3,
                                      long long* m, long long* n);

/* Average of P over the moduli space in the hyperbolic metric, normalized
 * by pi/3. b_max >= 10, tol in (0, 1e-2]. */
TT_API tt_status tt_moduli_average(double b_max, double tol, int include_tail,
                                   double* value, long long* cells);
/* Truncation self-check: same scheme applied to the constant 1 (~ pi/3). */
TT_API tt_status tt_moduli_volume(double b_max, double tol, int include_tail,
                                  double* value, long long* cells);

/* Grid scan of the closed form; grid_n >= 16. */
TT_API tt_status tt_extremes_scan(int grid_n, double* min_a, double* min_b,
                                  double* min_p, double* max_a, double* max_b,
                                  double* max_p);

/* ---- verification suite ---- */

typedef enum tt_verify_budget { TT_VERIFY_QUICK = 0, TT_VERIFY_FULL = 1 } tt_verify_budget;

typedef void (*tt_verify_report_fn)(const char* name, int ok, const char* detail,
                                    void* user);

/* Runs the invariant suite; reports each check through `report` (may be
 * NULL) and stores the failure count. Returns TT_OK even when checks fail;
 * inspect *failures. */
TT_API tt_status tt_verify(tt_verify_budget budget, uint64_t seed,
                           tt_verify_report_fn report, void* user, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* TRITORUS_H */
