#pragma once

#include "orthocubic/bary.hpp"
#include "orthocubic/triangle.hpp"

namespace orthocubic {

// Point at infinity of the direction perpendicular to one side; the
// coordinate sum is exactly zero.
struct DirectionVector {
  Rational u, v, w;

  BaryPoint as_point() const { return {u, v, w}; }
};

// Perpendicular direction on a side:
//   BC -> (2a^2, -a^2-b^2+c^2, -a^2+b^2-c^2) and the cyclic analogues.
DirectionVector perp_direction(const TriangleShape& t, Side side);

// Line through P and the side's perpendicular point at infinity, i.e. the
// perpendicular dropped from P onto that side. Throws
// Error(degenerate_determinant) when P is projectively the direction itself.
BaryLine perpendicular_line(const TriangleShape& t, const BaryPoint& p, Side side);

// Foot of the perpendicular from P onto a side, in normalized form (the two
// free coordinates sum to 1). Closed form, cleared by 2*side^2:
//   foot on BC = (0 : alpha*(a^2+b^2-c^2) + 2a^2*beta
//                  : alpha*(a^2-b^2+c^2) + 2a^2*gamma).
// Throws Error(point_at_infinity) for zero coordinate sum.
BaryPoint pedal_foot(const TriangleShape& t, const BaryPoint& p, Side side);

// Same foot via line_intersection(perpendicular_line(P, side), side line);
// kept as an independent route, equal to pedal_foot exactly.
BaryPoint pedal_foot_by_intersection(const TriangleShape& t, const BaryPoint& p,
                                     Side side);

struct PedalTriangle {
  BaryPoint foot_a;  // on BC, first coordinate zero
  BaryPoint foot_b;  // on CA, second coordinate zero
  BaryPoint foot_c;  // on AB, third coordinate zero
};

PedalTriangle pedal_triangle(const TriangleShape& t, const BaryPoint& p);

// Side line as a BaryLine: BC is x = 0, CA is y = 0, AB is z = 0.
BaryLine side_line(Side side);

}  // namespace orthocubic
