// rkstab: bounds, optimal radii, tables and figures for explicit Runge-Kutta
// stability polynomials. Talks to the library only through its C interface.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rkstab/rkstab.h"

using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

// A failed library call, carrying the status for the exit code.
struct CallError {
  rkstab_status status;
  std::string message;
};

void check(rkstab_status s, const std::string& what) {
  if (s != RKSTAB_OK)
    throw CallError{s, what + ": " + rkstab_status_name(s) + ": " + rkstab_last_error()};
}

int exit_code_for(rkstab_status s) { return s == RKSTAB_INVALID_ARGUMENT ? kExitUsage : kExitNumeric; }

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using PolyPtr = std::unique_ptr<rkstab_poly, Deleter<rkstab_poly, rkstab_poly_destroy>>;
using ReportPtr = std::unique_ptr<rkstab_report, Deleter<rkstab_report, rkstab_report_destroy>>;
using OptimalPtr = std::unique_ptr<rkstab_optimal, Deleter<rkstab_optimal, rkstab_optimal_destroy>>;
using RegionPtr = std::unique_ptr<rkstab_region, Deleter<rkstab_region, rkstab_region_destroy>>;

// Locale-independent fixed formatting ('.' decimal separator).
std::string fmt(double v, int digits = 6) {
  if (!std::isfinite(v)) return "nan";
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

double precision_scale_from_env() {
  const char* v = std::getenv("RKSTAB_PRECISION");
  if (!v || std::string(v).empty() || std::string(v) == "strict") return 1.0;
  if (std::string(v) == "fast") return 10.0;
  throw CallError{RKSTAB_INVALID_ARGUMENT,
                  std::string("RKSTAB_PRECISION must be 'fast' or 'strict', got '") + v + "'"};
}

struct Optimal {
  OptimalPtr handle;
  double radius = 0.0;
  json result;
};

Optimal compute_optimal(int m, int n, rkstab_geometry g, std::optional<std::pair<double, double>> damping) {
  rkstab_optimal_options opt;
  rkstab_optimal_options_init(&opt);
  opt.geometry = g;
  opt.precision_scale = precision_scale_from_env();
  if (damping) {
    opt.damped = 1;
    opt.eta = damping->first;
    opt.delta = damping->second;
  }
  rkstab_optimal* raw = nullptr;
  check(rkstab_optimal_compute(m, n, &opt, &raw), "optimal radius (" + std::to_string(m) + "," + std::to_string(n) + ")");
  Optimal o;
  o.handle.reset(raw);
  o.radius = rkstab_optimal_radius(raw);
  o.result = json::parse(rkstab_optimal_json(raw));
  return o;
}

PolyPtr optimal_poly(const Optimal& o) {
  rkstab_poly* p = nullptr;
  check(rkstab_optimal_poly(o.handle.get(), &p), "optimal polynomial");
  return PolyPtr(p);
}

json bound_json(rkstab_bound which, int m, int n, double& value) {
  rkstab_report* r = nullptr;
  check(rkstab_bound_compute(which, m, n, &r), "bound");
  ReportPtr h(r);
  value = rkstab_report_value(r);
  return json::parse(rkstab_report_json(r));
}

double bound_value(rkstab_bound which, int m, int n) {
  double v = 0.0;
  bound_json(which, m, n, v);
  return v;
}

rkstab_geometry parse_geometry(const std::string& s) {
  if (s == "disc") return RKSTAB_GEOMETRY_DISC;
  if (s == "segment") return RKSTAB_GEOMETRY_SEGMENT;
  if (s == "threshold") return RKSTAB_GEOMETRY_THRESHOLD;
  throw CallError{RKSTAB_INVALID_ARGUMENT, "unknown geometry '" + s + "'"};
}

// ------------------------------------------------------------- outputs ----

struct Outputs {
  std::vector<std::string> files;

  void write(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw CallError{RKSTAB_INVALID_ARGUMENT, "cannot write '" + path + "'"};
    f << text;
    files.push_back(path);
  }
};

std::string sidecar_path(const std::string& svg) {
  std::filesystem::path p(svg);
  p.replace_extension(".csv");
  return p.string();
}

// --------------------------------------------------------------- bounds ----

json cmd_bounds(int m, int n, std::optional<double> eta, std::optional<double> delta) {
  json out;
  out["m"] = m;
  out["n"] = n;
  json reports = json::array();
  double v = 0.0;
  reports.push_back(bound_json(RKSTAB_BOUND_ABSOLUTE_UPPER, m, n, v));
  out["absolute_upper"] = v;
  reports.push_back(bound_json(RKSTAB_BOUND_PARABOLIC_UPPER, m, n, v));
  out["parabolic_upper"] = v;
  out["parabolic_upper_closed_form"] = reports.back()["aux"]["closed_form"];
  reports.push_back(bound_json(RKSTAB_BOUND_PARABOLIC_LOWER, m, n, v));
  out["parabolic_lower"] = v;
  double cap = 0.0;
  check(rkstab_limit_cap(n, &cap), "limit cap");
  out["parabolic_limit_cap"] = cap;
  if (m > n) {
    double lo = 0.0, hi = 0.0;
    check(rkstab_threshold_interval(m, n, &lo, &hi), "threshold interval");
    out["threshold_interval"] = {lo, hi};
  }
  if (n <= 2) {
    rkstab_poly* p = nullptr;
    double radius = 0.0;
    check(rkstab_closed_form(m, n, &p, &radius), "closed form");
    PolyPtr h(p);
    std::vector<double> c(rkstab_poly_size(p));
    check(rkstab_poly_coeffs(p, c.data(), c.size()), "closed form coefficients");
    out["closed_form_optimal"] = {{"order", n}, {"radius", radius}, {"poly", c}};
  }
  if (eta || delta) {
    rkstab_report* r = nullptr;
    check(rkstab_damped_bound_compute(m, n, eta.value_or(0.0), delta.value_or(0.0), &r), "damped bound");
    ReportPtr h(r);
    out["damped_parabolic_upper"] = rkstab_report_value(r);
    reports.push_back(json::parse(rkstab_report_json(r)));
  }
  out["reports"] = reports;
  return out;
}

// --------------------------------------------------------------- tables ----

// Runs cells on a small pool; results land in their own slots, so the
// assembled output does not depend on scheduling.
void run_cells(size_t count, int jobs, const std::function<void(size_t)>& cell) {
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < count; i = next++) cell(i);
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  std::vector<std::jthread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
}

struct Cell {
  std::string text;
  std::string error;
};

std::string cell_value(const std::function<double()>& f, int digits, std::string& error) {
  try {
    return fmt(f(), digits);
  } catch (const CallError& e) {
    error = e.message;
    return "";
  }
}

std::pair<std::string, bool> cmd_table(int which, int jobs) {
  std::vector<std::string> header;
  std::vector<std::vector<std::function<double()>>> rows;
  std::vector<std::vector<std::string>> keys;
  std::vector<int> digits;
  if (which == 1) {
    header = {"m", "n", "r_mn", "upper_bound"};
    digits = {4, 4};
    for (auto [m, n] : std::vector<std::pair<int, int>>{{4, 3}, {5, 3}, {6, 4}, {6, 5}, {7, 5}}) {
      keys.push_back({std::to_string(m), std::to_string(n)});
      rows.push_back({[m, n] { return compute_optimal(m, n, RKSTAB_GEOMETRY_DISC, std::nullopt).radius; },
                      [m, n] { return bound_value(RKSTAB_BOUND_ABSOLUTE_UPPER, m, n); }});
    }
  } else if (which == 2) {
    header = {"m", "p2", "p3", "p4"};
    digits = {4, 4, 4};
    for (int m : {10, 30, 50, 70, 90}) {
      keys.push_back({std::to_string(m)});
      std::vector<std::function<double()>> r;
      for (int p : {2, 3, 4})
        r.push_back([m, p] {
          double v = 0.0;
          check(rkstab_lambda_max(m, p, &v), "lambda_max");
          return v;
        });
      rows.push_back(std::move(r));
    }
  } else if (which == 3) {
    header = {"n", "stages", "lower", "theta", "upper"};
    digits = {3, 3, 3};
    for (int n : {3, 4})
      for (int m = n + 1; m <= n + 9; ++m) {
        keys.push_back({std::to_string(n), std::to_string(m)});
        rows.push_back({[m, n] { return bound_value(RKSTAB_BOUND_PARABOLIC_LOWER, m, n); },
                        [m, n] { return compute_optimal(m, n, RKSTAB_GEOMETRY_SEGMENT, std::nullopt).radius; },
                        [m, n] { return bound_value(RKSTAB_BOUND_PARABOLIC_UPPER, m, n); }});
      }
  } else {
    throw CallError{RKSTAB_INVALID_ARGUMENT, "--which must be 1, 2 or 3"};
  }

  const size_t cols = rows.front().size();
  std::vector<Cell> cells(rows.size() * cols);
  run_cells(cells.size(), jobs, [&](size_t k) {
    Cell& c = cells[k];
    c.text = cell_value(rows[k / cols][k % cols], digits[k % cols], c.error);
  });

  std::string csv;
  for (size_t i = 0; i < header.size(); ++i) csv += (i ? "," : "") + header[i];
  csv += "\n";
  bool ok = true;
  for (size_t r = 0; r < rows.size(); ++r) {
    std::string line;
    for (size_t i = 0; i < keys[r].size(); ++i) line += (i ? "," : "") + keys[r][i];
    for (size_t c = 0; c < cols; ++c) {
      const Cell& cell = cells[r * cols + c];
      line += "," + cell.text;
      if (!cell.error.empty()) {
        ok = false;
        std::cerr << "cell failed: " << cell.error << "\n";
      }
    }
    csv += line + "\n";
  }
  return {csv, ok};
}

// -------------------------------------------------------------- figures ----

struct Panel {
  std::string title;
  double x_lo, x_hi, y_lo, y_hi;
  std::vector<std::vector<std::pair<double, double>>> curves;  // drawn as region contours
  std::vector<std::pair<double, double>> polygon;              // control polygon, optional
  std::vector<std::pair<double, double>> graph;                // P on the real interval, optional
};

std::string svg_document(const std::vector<Panel>& panels, bool timestamp) {
  const double pw = 420, ph = 320, margin = 30;
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(pw * panels.size(), 0) << "\" height=\""
     << fmt(ph + margin, 0) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  if (timestamp) {
    const std::time_t now = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    os << "<!-- generated " << buf << " -->\n";
  }
  for (size_t k = 0; k < panels.size(); ++k) {
    const Panel& p = panels[k];
    const double ox = k * pw + margin, oy = margin, w = pw - 2 * margin, h = ph - 2 * margin;
    auto X = [&](double x) { return fmt(ox + (x - p.x_lo) / (p.x_hi - p.x_lo) * w, 2); };
    auto Y = [&](double y) { return fmt(oy + (p.y_hi - y) / (p.y_hi - p.y_lo) * h, 2); };
    os << "<g>\n<text x=\"" << fmt(ox, 1) << "\" y=\"" << fmt(oy - 10, 1) << "\">" << p.title << "</text>\n";
    os << "<rect x=\"" << fmt(ox, 2) << "\" y=\"" << fmt(oy, 2) << "\" width=\"" << fmt(w, 2) << "\" height=\""
       << fmt(h, 2) << "\" fill=\"none\" stroke=\"#999\"/>\n";
    if (p.y_lo < 0 && p.y_hi > 0)
      os << "<line x1=\"" << X(p.x_lo) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(p.x_hi) << "\" y2=\"" << Y(0)
         << "\" stroke=\"#ccc\"/>\n";
    auto path = [&](const std::vector<std::pair<double, double>>& pts, const char* style) {
      if (pts.size() < 2) return;
      os << "<polyline fill=\"none\" " << style << " points=\"";
      for (size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << X(pts[i].first) << "," << Y(pts[i].second);
      os << "\"/>\n";
    };
    for (const auto& c : p.curves) path(c, "stroke=\"#1f4e9c\" stroke-width=\"1.2\"");
    path(p.graph, "stroke=\"#1f4e9c\" stroke-width=\"1.2\"");
    if (!p.polygon.empty()) {
      path(p.polygon, "stroke=\"#c0392b\" stroke-dasharray=\"4 3\"");
      for (const auto& [x, y] : p.polygon)
        os << "<circle cx=\"" << X(x) << "\" cy=\"" << Y(y) << "\" r=\"2.5\" fill=\"#c0392b\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::vector<std::vector<std::pair<double, double>>> contours(const rkstab_poly* p, const rkstab_window& w,
                                                             int res, int threads) {
  rkstab_region* raw = nullptr;
  check(rkstab_region_rasterize(p, &w, res, res, threads, &raw), "rasterize");
  RegionPtr region(raw);
  std::vector<std::vector<std::pair<double, double>>> out;
  for (size_t k = 0; k < rkstab_region_polyline_count(raw); ++k) {
    const size_t len = rkstab_region_polyline_size(raw, k);
    std::vector<double> re(len), im(len);
    check(rkstab_region_polyline(raw, k, re.data(), im.data(), len), "polyline");
    std::vector<std::pair<double, double>> line;
    for (size_t i = 0; i < len; ++i) line.emplace_back(re[i], im[i]);
    out.push_back(std::move(line));
  }
  return out;
}

Panel region_panel(const std::string& title, const rkstab_poly* p, double real_radius, int res, int threads) {
  rkstab_window w;
  check(rkstab_auto_window(real_radius, &w), "window");
  Panel panel{title, w.re_lo, w.re_hi, w.im_lo, w.im_hi, contours(p, w, res, threads), {}, {}};
  return panel;
}

std::string curves_csv(const std::vector<Panel>& panels) {
  std::string csv = "panel,kind,index,vertex,x,y\n";
  for (size_t k = 0; k < panels.size(); ++k) {
    const Panel& p = panels[k];
    for (size_t c = 0; c < p.curves.size(); ++c)
      for (size_t i = 0; i < p.curves[c].size(); ++i)
        csv += std::to_string(k) + ",contour," + std::to_string(c) + "," + std::to_string(i) + "," +
               fmt(p.curves[c][i].first, 9) + "," + fmt(p.curves[c][i].second, 9) + "\n";
    for (size_t i = 0; i < p.polygon.size(); ++i)
      csv += std::to_string(k) + ",control_polygon,0," + std::to_string(i) + "," + fmt(p.polygon[i].first, 9) +
             "," + fmt(p.polygon[i].second, 9) + "\n";
    for (size_t i = 0; i < p.graph.size(); ++i)
      csv += std::to_string(k) + ",graph,0," + std::to_string(i) + "," + fmt(p.graph[i].first, 9) + "," +
             fmt(p.graph[i].second, 9) + "\n";
  }
  return csv;
}

struct FigureArgs {
  int m = 0, n = 0;
  std::string kind;
  std::string geometry;
  double eta = 0.05;
  std::optional<double> delta;
  int resolution = 240;
  int threads = 1;
};

std::vector<Panel> cmd_figure(const FigureArgs& a, json& info) {
  std::vector<Panel> panels;
  const std::string tag = "m=" + std::to_string(a.m) + ", n=" + std::to_string(a.n);
  if (a.kind == "polygon") {
    const std::string geo = a.geometry.empty() ? "disc" : a.geometry;
    const rkstab_geometry g = parse_geometry(geo);
    if (g == RKSTAB_GEOMETRY_THRESHOLD)
      throw CallError{RKSTAB_INVALID_ARGUMENT, "polygon figures need the disc or segment geometry"};
    const Optimal o = compute_optimal(a.m, a.n, g, std::nullopt);
    const PolyPtr p = optimal_poly(o);
    const double a_lo = g == RKSTAB_GEOMETRY_DISC ? -2.0 * o.radius : -o.radius;
    std::vector<double> xs(static_cast<size_t>(a.m) + 1), ys(xs.size());
    check(rkstab_control_polygon(p.get(), a_lo, 0.0, a.m, xs.data(), ys.data(), xs.size()), "control polygon");
    Panel panel{"control polygon, " + tag + " (" + geo + ")", a_lo, 0.0, 0.0, 0.0, {}, {}, {}};
    double y_abs = 1.0;
    for (size_t i = 0; i < xs.size(); ++i) {
      panel.polygon.emplace_back(xs[i], ys[i]);
      y_abs = std::max(y_abs, std::abs(ys[i]));
    }
    for (int i = 0; i <= 400; ++i) {
      const double x = a_lo + (0.0 - a_lo) * i / 400.0;
      double re = 0.0;
      check(rkstab_poly_eval(p.get(), x, 0.0, &re, nullptr), "eval");
      panel.graph.emplace_back(x, re);
    }
    panel.y_lo = -1.1 * y_abs;
    panel.y_hi = 1.1 * y_abs;
    panels.push_back(std::move(panel));
    info["radius"] = o.radius;
    info["interval"] = {a_lo, 0.0};
    info["ordinates"] = ys;
  } else if (a.kind == "region") {
    const std::string geo = a.geometry.empty() ? "segment" : a.geometry;
    const rkstab_geometry g = parse_geometry(geo);
    const Optimal o = compute_optimal(a.m, a.n, g, std::nullopt);
    const PolyPtr p = optimal_poly(o);
    const double span = g == RKSTAB_GEOMETRY_DISC ? 2.0 * o.radius : o.radius;
    panels.push_back(region_panel("stability region, " + tag + " (" + geo + ")", p.get(), span, a.resolution,
                                  a.threads));
    info["radius"] = o.radius;
  } else if (a.kind == "damped") {
    if (a.n == 1) {
      rkstab_poly* raw = nullptr;
      double span = 0.0, delta = 0.0, eta_eff = 0.0;
      check(rkstab_damped_chebyshev(a.m, a.eta, &raw, &span, &delta, &eta_eff), "damped Chebyshev");
      PolyPtr damped(raw);
      check(rkstab_damped_chebyshev(a.m, 0.0, &raw, nullptr, nullptr, nullptr), "Chebyshev");
      PolyPtr plain(raw);
      const double undamped_span = 2.0 * a.m * a.m;
      panels.push_back(region_panel("undamped, " + tag, plain.get(), undamped_span, a.resolution, a.threads));
      panels.push_back(region_panel("damped eta=" + fmt(a.eta, 3) + ", " + tag, damped.get(), undamped_span,
                                    a.resolution, a.threads));
      info["span"] = span;
      info["delta_effective"] = delta;
      info["eta_effective"] = eta_eff;
      info["undamped_span"] = undamped_span;
    } else {
      // |P| <= 1 - eta cannot hold at -delta = -eta since P(x) ~ e^x there.
      const double delta = a.delta.value_or(2.0 * a.eta);
      const Optimal plain_o = compute_optimal(a.m, a.n, RKSTAB_GEOMETRY_SEGMENT, std::nullopt);
      const Optimal damped_o = compute_optimal(a.m, a.n, RKSTAB_GEOMETRY_SEGMENT, std::make_pair(a.eta, delta));
      const PolyPtr plain = optimal_poly(plain_o), damped = optimal_poly(damped_o);
      panels.push_back(region_panel("undamped, " + tag, plain.get(), plain_o.radius, a.resolution, a.threads));
      panels.push_back(region_panel("damped eta=" + fmt(a.eta, 3) + ", " + tag, damped.get(), plain_o.radius,
                                    a.resolution, a.threads));
      info["radius"] = plain_o.radius;
      info["damped_radius"] = damped_o.radius;
      info["delta"] = delta;
    }
    info["eta"] = a.eta;
  } else {
    throw CallError{RKSTAB_INVALID_ARGUMENT, "--kind must be region, polygon or damped"};
  }
  return panels;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability bounds and optimal stability polynomials for explicit Runge-Kutta methods"};
  app.set_version_flag("--version", std::string(rkstab_version()));
  app.require_subcommand(1);
  app.fallthrough();
  std::string manifest_path;
  bool no_timestamp = false;
  app.add_option("--manifest", manifest_path, "Write a JSON run manifest to this path");
  app.add_flag("--no-timestamp", no_timestamp, "Omit the generation timestamp from SVG output");

  int m = 0, n = 0;
  std::optional<double> eta, delta;
  auto* bounds = app.add_subcommand("bounds", "All analytic bounds for (m, n) as JSON");
  bounds->add_option("m", m, "Number of stages")->required();
  bounds->add_option("n", n, "Order")->required();
  bounds->add_option("--eta", eta, "Damping level for the damped parabolic bound");
  bounds->add_option("--delta", delta, "Damping offset for the damped parabolic bound");

  std::string geometry = "disc";
  auto* radius = app.add_subcommand("radius", "Optimal radius and polynomial as JSON");
  radius->add_option("m", m, "Number of stages")->required();
  radius->add_option("n", n, "Order")->required();
  radius->add_option("--geometry", geometry, "disc, segment or threshold")
      ->check(CLI::IsMember({"disc", "segment", "threshold"}));
  radius->add_option("--eta", eta, "Damping level (segment only)");
  radius->add_option("--delta", delta, "Damping offset (segment only)");

  int which = 0;
  std::string out_path;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto* table = app.add_subcommand("table", "Reproduce a bound table as CSV");
  table->add_option("--which", which, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  table->add_option("--out", out_path, "CSV path (stdout if omitted)");
  table->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  FigureArgs fig;
  auto* figure = app.add_subcommand("figure", "Stability region or control polygon as SVG plus CSV");
  figure->add_option("m", fig.m, "Number of stages")->required();
  figure->add_option("n", fig.n, "Order")->required();
  figure->add_option("--kind", fig.kind, "region, polygon or damped")
      ->required()
      ->check(CLI::IsMember({"region", "polygon", "damped"}));
  figure->add_option("--out", out_path, "SVG path")->required();
  figure->add_option("--geometry", fig.geometry, "disc or segment")->check(CLI::IsMember({"disc", "segment"}));
  figure->add_option("--eta", fig.eta, "Damping level (damped figures)");
  figure->add_option("--delta", fig.delta, "Damping offset (damped figures, n > 1; default 2 eta)");
  figure->add_option("--resolution", fig.resolution, "Raster points per side")->check(CLI::Range(16, 4000));
  figure->add_option("--jobs", fig.threads, "Rasterization threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  Outputs outputs;
  json params;
  std::string command;
  int rc = 0;
  try {
    if (*bounds) {
      command = "bounds";
      params = {{"m", m}, {"n", n}};
      if (eta) params["eta"] = *eta;
      if (delta) params["delta"] = *delta;
      std::cout << cmd_bounds(m, n, eta, delta).dump(2) << "\n";
    } else if (*radius) {
      command = "radius";
      params = {{"m", m}, {"n", n}, {"geometry", geometry}};
      std::optional<std::pair<double, double>> damping;
      if (eta || delta) {
        damping = std::make_pair(eta.value_or(0.0), delta.value_or(0.0));
        params["eta"] = damping->first;
        params["delta"] = damping->second;
      }
      const Optimal o = compute_optimal(m, n, parse_geometry(geometry), damping);
      std::cout << o.result.dump(2) << "\n";
    } else if (*table) {
      command = "table";
      params = {{"which", which}};
      auto [csv, ok] = cmd_table(which, jobs);
      if (out_path.empty()) std::cout << csv;
      else outputs.write(out_path, csv);
      if (!ok) rc = kExitNumeric;
    } else if (*figure) {
      command = "figure";
      params = {{"m", fig.m}, {"n", fig.n}, {"kind", fig.kind}, {"eta", fig.eta}, {"resolution", fig.resolution}};
      if (!fig.geometry.empty()) params["geometry"] = fig.geometry;
      if (fig.delta) params["delta"] = *fig.delta;
      json info;
      const auto panels = cmd_figure(fig, info);
      outputs.write(out_path, svg_document(panels, !no_timestamp));
      outputs.write(sidecar_path(out_path), curves_csv(panels));
      std::cout << info.dump(2) << "\n";
    }
  } catch (const CallError& e) {
    std::cerr << "error: " << e.message << "\n";
    rc = exit_code_for(e.status);
  }

  if (!manifest_path.empty()) {
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json manifest = {{"command", command},
                     {"parameters", params},
                     {"versions", {{"rkstab", rkstab_version()}}},
                     {"outputs", outputs.files},
                     {"manifest", manifest_path},
                     {"exit_code", rc},
                     {"wall_time", wall}};
    std::ofstream f(manifest_path, std::ios::binary);
    f << manifest.dump(2) << "\n";
  }
  return rc;
}
