#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rkstab/poly.hpp"

namespace rkstab {

/// Axis-aligned rectangle of the complex plane.
struct Window {
  double re_lo = -1.0;
  double re_hi = 1.0;
  double im_lo = -1.0;
  double im_hi = 1.0;
};

/// Frames a region whose real extent is about `real_radius`:
/// re in [-1.2R, 0.2R], im in [-0.7R, 0.7R].
Window auto_window(double real_radius);

struct RegionRaster {
  Window window;
  int nx = 0;
  int ny = 0;
  /// Row-major, ny rows of nx samples; sample (i, j) sits at
  /// re_lo + i (re_hi - re_lo)/(nx-1) + I (im_lo + j (im_hi - im_lo)/(ny-1)).
  std::vector<std::uint8_t> mask;
  /// Contour |P| = 1; closed loops repeat their first vertex at the end.
  std::vector<std::vector<Complex>> boundary;

  Complex point(int i, int j) const;
  bool inside(int i, int j) const { return mask[static_cast<size_t>(j) * static_cast<size_t>(nx) + static_cast<size_t>(i)] != 0; }
};

/// Mask of |P| <= 1 and its marching-squares contour, traced on log|P|
/// (clamped to [-50, 50]) with every crossing refined by bisection along its
/// edge. Ambiguous cells are resolved by the value at the cell centre.
/// Rows are evaluated on up to `threads` workers; output does not depend on it.
RegionRaster rasterize(const Poly& p, const Window& w, int nx, int ny, int threads = 1);

/// Vertices (abscissa, Bernstein ordinate) of the control polygon over iv.
std::vector<std::pair<double, double>> control_polygon(const Poly& p, const Interval& iv, int N);

}  // namespace rkstab
