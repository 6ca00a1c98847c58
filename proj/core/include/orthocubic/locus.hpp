#pragma once

#include "orthocubic/bary.hpp"
#include "orthocubic/cartesian.hpp"
#include "orthocubic/triangle.hpp"

namespace orthocubic {

// Cleared-denominator factors of the locus cubic:
//   kA = 2a^2(b^2+c^2-a^2) - (a^2+c^2-b^2)(a^2+b^2-c^2)   and cyclic.
// Each equals 4*a^2*b*c*(cos A - cos B cos C) up to the float radical.
struct PivotCoefficients {
  Rational k_a;
  Rational k_b;
  Rational k_c;
};

PivotCoefficients pivot_coefficients(const TriangleShape& t);

// The locus cubic of points whose pedal triangle is perspective with the
// reference triangle, in its exact polynomial form
//   F(alpha, beta, gamma) = alpha*(b^2*gamma^2 - c^2*beta^2)*kA
//                         + beta*(c^2*alpha^2 - a^2*gamma^2)*kB
//                         + gamma*(a^2*beta^2 - b^2*alpha^2)*kC.
// Homogeneous of degree 3; membership on rational input is decided by exact
// zero, never by tolerance.
class LocusCubic {
 public:
  explicit LocusCubic(const TriangleShape& t);

  const TriangleShape& triangle() const { return shape_; }
  const PivotCoefficients& coefficients() const { return k_; }

  // Exact value at the given homogeneous representative.
  Rational value(const BaryPoint& p) const;
  // Float value at the given representative (used by the tracer).
  double value(const BaryPointF& p) const;

  bool contains(const BaryPoint& p) const { return value(p) == 0; }

  // The equation as displayed with cosines,
  //   (alpha/a)(gamma^2/c^2 - beta^2/b^2)(cos A - cos B cos C) + cyclic,
  // evaluated in floats at the given representative. Equals
  // value(P) / (4*(abc)^3) for the same representative.
  double value_paper(const BaryPoint& p) const;
  double value_paper(const BaryPointF& p) const;

  // The same form in oriented distances,
  //   dA(dC^2 - dB^2)(cos A - cos B cos C) + cyclic;
  // proportional to value() at the normalized point by a P-independent
  // triangle constant.
  double value_distances(const OrientedDistances& d) const;

  // Third intersection of the cubic with the chord through the distinct
  // members P and Q: with X(t) = P + tQ the restriction is c1*t + c2*t^2,
  // and the result is X(-c1/c2), canonicalized. Errors: bad_input when a
  // precondition fails, coincident_points, chord_degenerate when c2 = 0
  // (chord tangent at Q or contained in the cubic).
  BaryPoint third_intersection(const BaryPoint& p, const BaryPoint& q) const;

 private:
  TriangleShape shape_;
  PivotCoefficients k_;
  // cached float views
  double ka_f_, kb_f_, kc_f_;
  double a2_f_, b2_f_, c2_f_;
  double a_f_, b_f_, c_f_;
  double cos_a_, cos_b_, cos_c_;
};

// Isogonal conjugate (a^2*beta*gamma : b^2*gamma*alpha : c^2*alpha*beta).
// Throws Error(undefined_at_vertex) when two coordinates vanish.
BaryPoint isogonal(const TriangleShape& t, const BaryPoint& p);
BaryPointF isogonal(const TriangleShape& t, const BaryPointF& p);

// Exact product (beta-alpha)(alpha-gamma)(gamma-beta): the factored locus
// polynomial of the unit equilateral triangle, whose zero set is the union
// of the medians.
Rational equilateral_locus_value(const BaryPoint& p);

}  // namespace orthocubic
