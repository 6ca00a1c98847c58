#pragma once

#include "orthocubic/bary.hpp"
#include "orthocubic/triangle.hpp"

namespace orthocubic {

struct PointXY {
  double x{};
  double y{};

  friend bool operator==(const PointXY&, const PointXY&) = default;
};

// Fixed embedding of the reference triangle: B at the origin, C on the
// positive x-axis, A strictly above. Deterministic oracle frame and plot
// frame; every cartesian quantity in the library lives here.
struct CartesianPlacement {
  PointXY a;
  PointXY b;
  PointXY c;

  static CartesianPlacement standard(const TriangleShape& t);

  double diameter() const;  // longest side
};

// Signed perpendicular distances from a point to the side lines BC, CA, AB,
// positive on the triangle's interior side.
struct OrientedDistances {
  double d_a{};
  double d_b{};
  double d_c{};
};

PointXY to_cartesian(const CartesianPlacement& placement, const BaryPoint& p);
PointXY to_cartesian(const CartesianPlacement& placement, const BaryPointF& p);

// Barycentrics of a cartesian point by signed subtriangle areas (float path);
// the returned triple sums to 1.
BaryPointF from_cartesian(const CartesianPlacement& placement, PointXY pt);

// d_A = 2*Area*alpha / (a * (alpha+beta+gamma)) and cyclic; the normalized
// coordinate ratio is exact, the final value is float (it carries the area
// radical). Throws Error(point_at_infinity) on zero coordinate sum.
OrientedDistances oriented_distances(const TriangleShape& t, const BaryPoint& p);
OrientedDistances oriented_distances(const TriangleShape& t, const BaryPointF& p);

}  // namespace orthocubic
