#include "rkstab/region.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <thread>

#include "rkstab/bernstein.hpp"
#include "rkstab/error.hpp"

namespace rkstab {

namespace {

double level_fn(const Poly& p, Complex z) {
  const double a = std::abs(p(z));
  if (a == 0.0) return -50.0;
  return std::clamp(std::log(a), -50.0, 50.0);
}

// Edge ids: horizontal edge from (i,j) to (i+1,j) is 2(j nx + i); vertical
// edge from (i,j) to (i,j+1) is 2(j nx + i) + 1.
struct Segment {
  long a;
  long b;
};

}  // namespace

Window auto_window(double real_radius) {
  require(real_radius > 0.0 && std::isfinite(real_radius), "auto_window: radius must be positive");
  return {-1.2 * real_radius, 0.2 * real_radius, -0.7 * real_radius, 0.7 * real_radius};
}

Complex RegionRaster::point(int i, int j) const {
  return {window.re_lo + i * (window.re_hi - window.re_lo) / (nx - 1),
          window.im_lo + j * (window.im_hi - window.im_lo) / (ny - 1)};
}

RegionRaster rasterize(const Poly& p, const Window& w, int nx, int ny, int threads) {
  require(nx >= 16 && ny >= 16, "rasterize: resolution must be at least 16x16");
  require(w.re_lo < w.re_hi && w.im_lo < w.im_hi, "rasterize: empty window");
  RegionRaster r;
  r.window = w;
  r.nx = nx;
  r.ny = ny;

  std::vector<double> f(static_cast<size_t>(nx) * static_cast<size_t>(ny));
  auto rows = [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j)
      for (int i = 0; i < nx; ++i)
        f[static_cast<size_t>(j) * static_cast<size_t>(nx) + static_cast<size_t>(i)] = level_fn(p, r.point(i, j));
  };
  const int workers = std::clamp(threads, 1, ny);
  if (workers == 1) {
    rows(0, ny);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(rows, ny * t / workers, ny * (t + 1) / workers);
  }
  auto F = [&](int i, int j) { return f[static_cast<size_t>(j) * static_cast<size_t>(nx) + static_cast<size_t>(i)]; };

  r.mask.resize(f.size());
  for (size_t k = 0; k < f.size(); ++k) r.mask[k] = f[k] <= 0.0 ? 1 : 0;

  // Cell corners in order (i,j), (i+1,j), (i+1,j+1), (i,j+1); the four sides
  // are bottom, right, top, left.
  std::vector<Segment> segs;
  for (int j = 0; j + 1 < ny; ++j) {
    for (int i = 0; i + 1 < nx; ++i) {
      const std::array<bool, 4> in = {r.inside(i, j), r.inside(i + 1, j), r.inside(i + 1, j + 1),
                                      r.inside(i, j + 1)};
      const long base = 2L * (static_cast<long>(j) * nx + i);
      const std::array<long, 4> side = {base, 2L * (static_cast<long>(j) * nx + i + 1) + 1,
                                        2L * (static_cast<long>(j + 1) * nx + i), base + 1};
      std::vector<int> cut;
      for (int s = 0; s < 4; ++s)
        if (in[static_cast<size_t>(s)] != in[static_cast<size_t>((s + 1) % 4)]) cut.push_back(s);
      if (cut.size() == 2) {
        segs.push_back({side[static_cast<size_t>(cut[0])], side[static_cast<size_t>(cut[1])]});
      } else if (cut.size() == 4) {
        const Complex c = 0.5 * (r.point(i, j) + r.point(i + 1, j + 1));
        const bool centre_in = level_fn(p, c) <= 0.0;
        // Connect around the corners whose state differs from the centre.
        if (centre_in == in[0]) {
          segs.push_back({side[0], side[1]});
          segs.push_back({side[2], side[3]});
        } else {
          segs.push_back({side[3], side[0]});
          segs.push_back({side[1], side[2]});
        }
      }
    }
  }

  std::map<long, Complex> vertex;
  auto crossing = [&](long id) -> Complex {
    auto it = vertex.find(id);
    if (it != vertex.end()) return it->second;
    const long cell = id / 2;
    const int i = static_cast<int>(cell % nx), j = static_cast<int>(cell / nx);
    const Complex a = r.point(i, j);
    const Complex b = id % 2 == 0 ? r.point(i + 1, j) : r.point(i, j + 1);
    const double fa = F(i, j);
    const double fb = id % 2 == 0 ? F(i + 1, j) : F(i, j + 1);
    double lo = 0.0, hi = 1.0;
    double t = fa == fb ? 0.5 : std::clamp(fa / (fa - fb), 0.0, 1.0);
    // Refine the interpolated crossing by bisection on the edge.
    for (int k = 0; k < 60; ++k) {
      const double ft = level_fn(p, a + t * (b - a));
      if (std::abs(ft) <= 1e-9) break;
      if ((ft <= 0.0) == (fa <= 0.0)) lo = t;
      else hi = t;
      t = 0.5 * (lo + hi);
    }
    const Complex z = a + t * (b - a);
    vertex.emplace(id, z);
    return z;
  };

  std::map<long, std::vector<size_t>> by_edge;
  for (size_t s = 0; s < segs.size(); ++s) {
    by_edge[segs[s].a].push_back(s);
    by_edge[segs[s].b].push_back(s);
  }
  std::vector<bool> used(segs.size(), false);
  auto trace = [&](size_t first, long start) {
    std::vector<Complex> line{crossing(start)};
    long at = start;
    size_t s = first;
    for (;;) {
      used[s] = true;
      at = segs[s].a == at ? segs[s].b : segs[s].a;
      line.push_back(crossing(at));
      size_t next = segs.size();
      for (size_t cand : by_edge[at])
        if (!used[cand]) {
          next = cand;
          break;
        }
      if (next == segs.size()) break;
      s = next;
    }
    r.boundary.push_back(std::move(line));
  };
  // Open chains start at window-border edges (one incident segment).
  for (const auto& [id, list] : by_edge)
    if (list.size() == 1 && !used[list[0]]) trace(list[0], id);
  for (size_t s = 0; s < segs.size(); ++s)
    if (!used[s]) trace(s, segs[s].a);
  return r;
}

std::vector<std::pair<double, double>> control_polygon(const Poly& p, const Interval& iv, int N) {
  return to_bernstein(p, iv, N).control_polygon();
}

}  // namespace rkstab
