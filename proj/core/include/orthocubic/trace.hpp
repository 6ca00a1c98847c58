#pragma once

#include <vector>

#include "orthocubic/cartesian.hpp"
#include "orthocubic/locus.hpp"

namespace orthocubic {

struct Bbox {
  double x0{};
  double y0{};
  double x1{};
  double y1{};

  bool valid() const { return x1 > x0 && y1 > y0; }
};

// Triangle bounding box expanded by 1.5 about its center; the default
// tracing window.
Bbox default_trace_bbox(const CartesianPlacement& placement);

using Polyline = std::vector<PointXY>;

struct TracedCurve {
  std::vector<Polyline> polylines;
  Bbox bbox;
  int resolution = 0;  // grid points per axis
};

// Marching-squares contour of (x, y) -> F(from_cartesian(x, y)) at level 0.
// resolution is the number of grid points per axis (>= 2). Saddle cells are
// resolved by the sign of the cell-center value; crossings on shared edges
// are computed once, so adjacent cells stitch bit-identically. Polylines are
// emitted in lexicographic order of their seed cell (row, then column);
// closed loops repeat the first vertex at the end. Deterministic for fixed
// inputs; an empty result is valid.
TracedCurve trace(const LocusCubic& cubic, const Bbox& bbox, int resolution);

}  // namespace orthocubic
