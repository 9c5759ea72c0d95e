/* C interface to the stability-polynomial library. Every fallible call
 * returns an rkstab_status; on failure rkstab_last_error() describes it.
 * Handles are opaque and released by their *_destroy function. Buffers are
 * caller-owned: pass their capacity; a short buffer is INVALID_ARGUMENT. */
#ifndef RKSTAB_H
#define RKSTAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(RKSTAB_BUILDING_LIBRARY) && (defined(__GNUC__) || defined(__clang__))
#define RKSTAB_API __attribute__((visibility("default")))
#else
#define RKSTAB_API
#endif

typedef enum {
  RKSTAB_OK = 0,
  RKSTAB_INVALID_ARGUMENT = 1,
  RKSTAB_NO_SIGN_CHANGE = 2,
  RKSTAB_NO_ROOT_FOUND = 3,
  RKSTAB_SOLVER_STALL = 4,
  RKSTAB_DEGENERATE = 5,
  RKSTAB_INTERNAL_ERROR = 6
} rkstab_status;

RKSTAB_API const char* rkstab_version(void);
/* Message of the last failure on the calling thread ("" if none). */
RKSTAB_API const char* rkstab_last_error(void);
RKSTAB_API const char* rkstab_status_name(rkstab_status s);

/* ---- polynomials ---- */
typedef struct rkstab_poly rkstab_poly;

RKSTAB_API rkstab_status rkstab_poly_create(const double* coeffs, size_t count, rkstab_poly** out);
RKSTAB_API void rkstab_poly_destroy(rkstab_poly* p);
/* Number of stored coefficients (degree bound + 1). */
RKSTAB_API size_t rkstab_poly_size(const rkstab_poly* p);
RKSTAB_API rkstab_status rkstab_poly_coeffs(const rkstab_poly* p, double* out, size_t cap);
RKSTAB_API rkstab_status rkstab_poly_eval(const rkstab_poly* p, double re, double im, double* out_re,
                                          double* out_im);
/* Ordinates q_0..q_degree of p over (a, b); cap >= degree + 1. */
RKSTAB_API rkstab_status rkstab_bernstein_ordinates(const rkstab_poly* p, double a, double b, int degree,
                                                    double* out, size_t cap);
/* Bernstein ordinates of the degree-m Chebyshev polynomial on any interval. */
RKSTAB_API rkstab_status rkstab_chebyshev_ordinates(int m, double* out, size_t cap);
/* Control polygon vertices over (a, b) at degree N; cap >= N + 1. */
RKSTAB_API rkstab_status rkstab_control_polygon(const rkstab_poly* p, double a, double b, int N, double* xs,
                                                double* ys, size_t cap);

/* ---- bounds ---- */
typedef enum {
  RKSTAB_BOUND_ABSOLUTE_UPPER = 0,
  RKSTAB_BOUND_PARABOLIC_UPPER = 1,
  RKSTAB_BOUND_PARABOLIC_LOWER = 2
} rkstab_bound;

typedef struct rkstab_report rkstab_report;

RKSTAB_API rkstab_status rkstab_bound_compute(rkstab_bound which, int m, int n, rkstab_report** out);
RKSTAB_API rkstab_status rkstab_damped_bound_compute(int m, int n, double eta, double delta,
                                                     rkstab_report** out);
RKSTAB_API double rkstab_report_value(const rkstab_report* r);
RKSTAB_API const char* rkstab_report_name(const rkstab_report* r);
/* JSON text owned by the report. */
RKSTAB_API const char* rkstab_report_json(const rkstab_report* r);
RKSTAB_API void rkstab_report_destroy(rkstab_report* r);

RKSTAB_API rkstab_status rkstab_limit_cap(int n, double* out);
RKSTAB_API rkstab_status rkstab_threshold_interval(int m, int n, double* lo, double* hi);
/* order 1 or 2; *poly must be destroyed by the caller. */
RKSTAB_API rkstab_status rkstab_closed_form(int m, int order, rkstab_poly** poly, double* radius);
RKSTAB_API rkstab_status rkstab_stage_interval(int m, int n, int p, double r_prev, double* lo, double* hi);
/* Damped Chebyshev polynomial with its real span and effective delta, eta. */
RKSTAB_API rkstab_status rkstab_damped_chebyshev(int m, double eta, rkstab_poly** poly, double* span,
                                                 double* delta_eff, double* eta_eff);

/* ---- quadrature ---- */
RKSTAB_API rkstab_status rkstab_gauss_rule(int m, int p, double* nodes, double* weights, size_t cap);
RKSTAB_API rkstab_status rkstab_lambda_max(int m, int p, double* out);

/* ---- optimal radii ---- */
typedef enum {
  RKSTAB_GEOMETRY_DISC = 0,
  RKSTAB_GEOMETRY_SEGMENT = 1,
  RKSTAB_GEOMETRY_THRESHOLD = 2
} rkstab_geometry;

typedef struct {
  rkstab_geometry geometry;
  int damped; /* nonzero: segment with |P| <= 1 - eta on [-r, -delta] */
  double eta;
  double delta;
  double precision_scale; /* 1 strict, 10 fast */
  double bisection_width;
} rkstab_optimal_options;

RKSTAB_API void rkstab_optimal_options_init(rkstab_optimal_options* opt);

typedef struct rkstab_optimal rkstab_optimal;

RKSTAB_API rkstab_status rkstab_optimal_compute(int m, int n, const rkstab_optimal_options* opt,
                                                rkstab_optimal** out);
RKSTAB_API double rkstab_optimal_radius(const rkstab_optimal* r);
RKSTAB_API rkstab_status rkstab_optimal_poly(const rkstab_optimal* r, rkstab_poly** out);
RKSTAB_API const char* rkstab_optimal_json(const rkstab_optimal* r);
RKSTAB_API void rkstab_optimal_destroy(rkstab_optimal* r);

/* ---- stability regions ---- */
typedef struct {
  double re_lo, re_hi, im_lo, im_hi;
} rkstab_window;

typedef struct rkstab_region rkstab_region;

RKSTAB_API rkstab_status rkstab_auto_window(double real_radius, rkstab_window* out);
RKSTAB_API rkstab_status rkstab_region_rasterize(const rkstab_poly* p, const rkstab_window* w, int nx, int ny,
                                                 int threads, rkstab_region** out);
RKSTAB_API size_t rkstab_region_polyline_count(const rkstab_region* r);
RKSTAB_API size_t rkstab_region_polyline_size(const rkstab_region* r, size_t k);
RKSTAB_API rkstab_status rkstab_region_polyline(const rkstab_region* r, size_t k, double* re, double* im,
                                                size_t cap);
/* Row-major ny x nx mask, 1 where |P| <= 1. */
RKSTAB_API rkstab_status rkstab_region_mask(const rkstab_region* r, unsigned char* out, size_t cap);
RKSTAB_API void rkstab_region_destroy(rkstab_region* r);

#ifdef __cplusplus
}
#endif

#endif /* RKSTAB_H */
