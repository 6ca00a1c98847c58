#pragma once

#include "orthocubic/bary.hpp"
#include "orthocubic/cartesian.hpp"
#include "orthocubic/triangle.hpp"

namespace orthocubic {

// Independent cartesian brute force. Nothing here touches the barycentric
// closed forms; this is the referee the exact path is checked against.

// p*x + q*y + r = 0 with p^2 + q^2 = 1.
struct CartesianLine {
  double p{};
  double q{};
  double r{};
};

// Line through two distinct points, unit-normalized.
// Throws Error(degenerate_segment) when the points coincide.
CartesianLine cartesian_line(PointXY a, PointXY b);

double line_value(const CartesianLine& line, PointXY pt);

// Orthogonal projection of P onto the line through seg_a, seg_b.
PointXY cart_foot(PointXY seg_a, PointXY seg_b, PointXY p);

// Absolute determinant of the three unit-normalized cevian lines
// (vertex to cartesian pedal foot). Scale-aware residual: zero means the
// cevians concur. Throws Error(degenerate_cevian) if a cevian collapses.
double cart_concurrency_residual(const TriangleShape& t,
                                 const CartesianPlacement& placement,
                                 const BaryPoint& p);
double cart_concurrency_residual(const TriangleShape& t,
                                 const CartesianPlacement& placement,
                                 const BaryPointF& p);

bool oracle_is_perspective(const TriangleShape& t,
                           const CartesianPlacement& placement,
                           const BaryPoint& p, double tol = 1e-9);
bool oracle_is_perspective(const TriangleShape& t,
                           const CartesianPlacement& placement,
                           const BaryPointF& p, double tol = 1e-9);

}  // namespace orthocubic
