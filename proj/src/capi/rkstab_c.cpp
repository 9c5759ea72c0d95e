#include "rkstab/rkstab.h"

#include <exception>
#include <new>
#include <string>

#include "rkstab/bernstein.hpp"
#include "rkstab/bounds.hpp"
#include "rkstab/error.hpp"
#include "rkstab/optimal.hpp"
#include "rkstab/quadrature.hpp"
#include "rkstab/region.hpp"
#include "rkstab/serialize.hpp"
#include "rkstab/special.hpp"

struct rkstab_poly {
  rkstab::Poly p;
};

struct rkstab_report {
  rkstab::BoundReport r;
  std::string json;
};

struct rkstab_optimal {
  rkstab::OptimalResult r;
  std::string json;
};

struct rkstab_region {
  rkstab::RegionRaster r;
};

namespace {

thread_local std::string g_last_error;

rkstab_status map_code(rkstab::ErrorCode c) {
  switch (c) {
    case rkstab::ErrorCode::InvalidArgument: return RKSTAB_INVALID_ARGUMENT;
    case rkstab::ErrorCode::NoSignChange: return RKSTAB_NO_SIGN_CHANGE;
    case rkstab::ErrorCode::NoRootFound: return RKSTAB_NO_ROOT_FOUND;
    case rkstab::ErrorCode::SolverStall: return RKSTAB_SOLVER_STALL;
    case rkstab::ErrorCode::Degenerate: return RKSTAB_DEGENERATE;
  }
  return RKSTAB_INTERNAL_ERROR;
}

template <class F>
rkstab_status guard(F&& body) {
  try {
    g_last_error.clear();
    body();
    return RKSTAB_OK;
  } catch (const rkstab::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown failure";
  }
  return RKSTAB_INTERNAL_ERROR;
}

void need(const void* ptr, const char* what) {
  rkstab::require(ptr != nullptr, std::string(what) + " must not be NULL");
}

void need_cap(size_t cap, size_t want) {
  rkstab::require(cap >= want, "buffer too small: need " + std::to_string(want) + ", got " +
                                   std::to_string(cap));
}

}  // namespace

extern "C" {

const char* rkstab_version(void) { return RKSTAB_VERSION_STRING; }

const char* rkstab_last_error(void) { return g_last_error.c_str(); }

const char* rkstab_status_name(rkstab_status s) {
  switch (s) {
    case RKSTAB_OK: return "ok";
    case RKSTAB_INVALID_ARGUMENT: return "invalid_argument";
    case RKSTAB_NO_SIGN_CHANGE: return "no_sign_change";
    case RKSTAB_NO_ROOT_FOUND: return "no_root_found";
    case RKSTAB_SOLVER_STALL: return "solver_stall";
    case RKSTAB_DEGENERATE: return "degenerate";
    case RKSTAB_INTERNAL_ERROR: return "internal_error";
  }
  return "unknown";
}

rkstab_status rkstab_poly_create(const double* coeffs, size_t count, rkstab_poly** out) {
  return guard([&] {
    need(out, "out");
    rkstab::require(count == 0 || coeffs != nullptr, "coeffs must not be NULL");
    *out = new rkstab_poly{rkstab::Poly(std::vector<double>(coeffs, coeffs + count))};
  });
}

void rkstab_poly_destroy(rkstab_poly* p) { delete p; }

size_t rkstab_poly_size(const rkstab_poly* p) { return p ? p->p.coeffs().size() : 0; }

rkstab_status rkstab_poly_coeffs(const rkstab_poly* p, double* out, size_t cap) {
  return guard([&] {
    need(p, "poly");
    need(out, "out");
    const auto c = p->p.coeffs();
    need_cap(cap, c.size());
    std::copy(c.begin(), c.end(), out);
  });
}

rkstab_status rkstab_poly_eval(const rkstab_poly* p, double re, double im, double* out_re, double* out_im) {
  return guard([&] {
    need(p, "poly");
    need(out_re, "out_re");
    const rkstab::Complex v = p->p(rkstab::Complex(re, im));
    *out_re = v.real();
    if (out_im) *out_im = v.imag();
  });
}

rkstab_status rkstab_bernstein_ordinates(const rkstab_poly* p, double a, double b, int degree, double* out,
                                         size_t cap) {
  return guard([&] {
    need(p, "poly");
    need(out, "out");
    rkstab::require(degree >= 0, "degree must be non-negative");
    need_cap(cap, static_cast<size_t>(degree) + 1);
    const auto bf = rkstab::to_bernstein(p->p, rkstab::Interval(a, b), degree);
    std::copy(bf.ordinates().begin(), bf.ordinates().end(), out);
  });
}

rkstab_status rkstab_chebyshev_ordinates(int m, double* out, size_t cap) {
  return guard([&] {
    need(out, "out");
    const auto q = rkstab::chebyshev_bernstein_ordinates(m);
    need_cap(cap, q.size());
    std::copy(q.begin(), q.end(), out);
  });
}

rkstab_status rkstab_control_polygon(const rkstab_poly* p, double a, double b, int N, double* xs, double* ys,
                                     size_t cap) {
  return guard([&] {
    need(p, "poly");
    need(xs, "xs");
    need(ys, "ys");
    rkstab::require(N >= 0, "N must be non-negative");
    need_cap(cap, static_cast<size_t>(N) + 1);
    const auto poly = rkstab::control_polygon(p->p, rkstab::Interval(a, b), N);
    for (size_t i = 0; i < poly.size(); ++i) {
      xs[i] = poly[i].first;
      ys[i] = poly[i].second;
    }
  });
}

rkstab_status rkstab_bound_compute(rkstab_bound which, int m, int n, rkstab_report** out) {
  return guard([&] {
    need(out, "out");
    rkstab::BoundReport r;
    switch (which) {
      case RKSTAB_BOUND_ABSOLUTE_UPPER: r = rkstab::absolute_upper(m, n); break;
      case RKSTAB_BOUND_PARABOLIC_UPPER: r = rkstab::parabolic_upper(m, n); break;
      case RKSTAB_BOUND_PARABOLIC_LOWER: r = rkstab::parabolic_lower(m, n); break;
      default: rkstab::fail(rkstab::ErrorCode::InvalidArgument, "unknown bound");
    }
    auto* h = new rkstab_report{std::move(r), {}};
    h->json = rkstab::to_json(h->r).dump();
    *out = h;
  });
}

rkstab_status rkstab_damped_bound_compute(int m, int n, double eta, double delta, rkstab_report** out) {
  return guard([&] {
    need(out, "out");
    auto* h = new rkstab_report{rkstab::damped_parabolic_upper(m, n, eta, delta), {}};
    h->json = rkstab::to_json(h->r).dump();
    *out = h;
  });
}

double rkstab_report_value(const rkstab_report* r) { return r ? r->r.value : 0.0; }
const char* rkstab_report_name(const rkstab_report* r) { return r ? r->r.name.c_str() : ""; }
const char* rkstab_report_json(const rkstab_report* r) { return r ? r->json.c_str() : "null"; }
void rkstab_report_destroy(rkstab_report* r) { delete r; }

rkstab_status rkstab_limit_cap(int n, double* out) {
  return guard([&] {
    need(out, "out");
    *out = rkstab::parabolic_limit_cap(n);
  });
}

rkstab_status rkstab_threshold_interval(int m, int n, double* lo, double* hi) {
  return guard([&] {
    need(lo, "lo");
    need(hi, "hi");
    const auto b = rkstab::threshold_upper_lower(m, n);
    *lo = b.lo;
    *hi = b.hi;
  });
}

rkstab_status rkstab_closed_form(int m, int order, rkstab_poly** poly, double* radius) {
  return guard([&] {
    need(poly, "poly");
    auto [p, r] = rkstab::closed_form_optimal(m, order);
    if (radius) *radius = r;
    *poly = new rkstab_poly{std::move(p)};
  });
}

rkstab_status rkstab_stage_interval(int m, int n, int p, double r_prev, double* lo, double* hi) {
  return guard([&] {
    need(lo, "lo");
    need(hi, "hi");
    const auto iv = rkstab::stage_inequality(m, n, p, r_prev);
    *lo = iv.lo();
    *hi = iv.hi();
  });
}

rkstab_status rkstab_damped_chebyshev(int m, double eta, rkstab_poly** poly, double* span, double* delta_eff,
                                      double* eta_eff) {
  return guard([&] {
    need(poly, "poly");
    auto d = rkstab::damped_chebyshev(m, eta);
    if (span) *span = d.span;
    if (delta_eff) *delta_eff = d.delta;
    if (eta_eff) *eta_eff = d.eta;
    *poly = new rkstab_poly{std::move(d.poly)};
  });
}

rkstab_status rkstab_gauss_rule(int m, int p, double* nodes, double* weights, size_t cap) {
  return guard([&] {
    need(nodes, "nodes");
    need(weights, "weights");
    const auto q = rkstab::gauss_rule(m, p);
    need_cap(cap, q.nodes.size());
    std::copy(q.nodes.begin(), q.nodes.end(), nodes);
    std::copy(q.weights.begin(), q.weights.end(), weights);
  });
}

rkstab_status rkstab_lambda_max(int m, int p, double* out) {
  return guard([&] {
    need(out, "out");
    *out = rkstab::lambda_max(m, p);
  });
}

void rkstab_optimal_options_init(rkstab_optimal_options* opt) {
  if (!opt) return;
  opt->geometry = RKSTAB_GEOMETRY_DISC;
  opt->damped = 0;
  opt->eta = 0.0;
  opt->delta = 0.0;
  opt->precision_scale = 1.0;
  opt->bisection_width = 1e-3;
}

rkstab_status rkstab_optimal_compute(int m, int n, const rkstab_optimal_options* opt, rkstab_optimal** out) {
  return guard([&] {
    need(out, "out");
    rkstab_optimal_options o;
    rkstab_optimal_options_init(&o);
    if (opt) o = *opt;
    rkstab::OptimalOptions oo;
    oo.precision_scale = o.precision_scale;
    oo.bisection_width = o.bisection_width;
    if (o.damped) oo.damping = rkstab::Damping{o.eta, o.delta};
    rkstab::Geometry g;
    switch (o.geometry) {
      case RKSTAB_GEOMETRY_DISC: g = rkstab::Geometry::Disc; break;
      case RKSTAB_GEOMETRY_SEGMENT: g = rkstab::Geometry::Segment; break;
      case RKSTAB_GEOMETRY_THRESHOLD: g = rkstab::Geometry::Threshold; break;
      default: rkstab::fail(rkstab::ErrorCode::InvalidArgument, "unknown geometry");
    }
    auto* h = new rkstab_optimal{rkstab::optimal_radius(m, n, g, oo), {}};
    h->json = rkstab::to_json(h->r).dump();
    *out = h;
  });
}

double rkstab_optimal_radius(const rkstab_optimal* r) { return r ? r->r.radius : 0.0; }

rkstab_status rkstab_optimal_poly(const rkstab_optimal* r, rkstab_poly** out) {
  return guard([&] {
    need(r, "result");
    need(out, "out");
    *out = new rkstab_poly{r->r.poly};
  });
}

const char* rkstab_optimal_json(const rkstab_optimal* r) { return r ? r->json.c_str() : "null"; }
void rkstab_optimal_destroy(rkstab_optimal* r) { delete r; }

rkstab_status rkstab_auto_window(double real_radius, rkstab_window* out) {
  return guard([&] {
    need(out, "out");
    const auto w = rkstab::auto_window(real_radius);
    *out = {w.re_lo, w.re_hi, w.im_lo, w.im_hi};
  });
}

rkstab_status rkstab_region_rasterize(const rkstab_poly* p, const rkstab_window* w, int nx, int ny, int threads,
                                      rkstab_region** out) {
  return guard([&] {
    need(p, "poly");
    need(w, "window");
    need(out, "out");
    const rkstab::Window win{w->re_lo, w->re_hi, w->im_lo, w->im_hi};
    *out = new rkstab_region{rkstab::rasterize(p->p, win, nx, ny, threads)};
  });
}

size_t rkstab_region_polyline_count(const rkstab_region* r) { return r ? r->r.boundary.size() : 0; }

size_t rkstab_region_polyline_size(const rkstab_region* r, size_t k) {
  return r && k < r->r.boundary.size() ? r->r.boundary[k].size() : 0;
}

rkstab_status rkstab_region_polyline(const rkstab_region* r, size_t k, double* re, double* im, size_t cap) {
  return guard([&] {
    need(r, "region");
    need(re, "re");
    need(im, "im");
    rkstab::require(k < r->r.boundary.size(), "polyline index out of range");
    const auto& line = r->r.boundary[k];
    need_cap(cap, line.size());
    for (size_t i = 0; i < line.size(); ++i) {
      re[i] = line[i].real();
      im[i] = line[i].imag();
    }
  });
}

rkstab_status rkstab_region_mask(const rkstab_region* r, unsigned char* out, size_t cap) {
  return guard([&] {
    need(r, "region");
    need(out, "out");
    need_cap(cap, r->r.mask.size());
    std::copy(r->r.mask.begin(), r->r.mask.end(), out);
  });
}

void rkstab_region_destroy(rkstab_region* r) { delete r; }

}  // extern "C"
