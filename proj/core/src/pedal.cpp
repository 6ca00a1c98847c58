#include "orthocubic/pedal.hpp"

#include "orthocubic/errors.hpp"

namespace orthocubic {

DirectionVector perp_direction(const TriangleShape& t, Side side) {
  const Rational two(2);
  switch (side) {
    case Side::BC:
      return {two * t.a2(), -t.sc(), -t.sb()};
    case Side::CA:
      return {-t.sc(), two * t.b2(), -t.sa()};
    case Side::AB:
      return {-t.sb(), -t.sa(), two * t.c2()};
  }
  fail(ErrorCode::bad_input, "invalid side");
}

BaryLine side_line(Side side) {
  switch (side) {
    case Side::BC: return {Rational(1), Rational(0), Rational(0)};
    case Side::CA: return {Rational(0), Rational(1), Rational(0)};
    case Side::AB: return {Rational(0), Rational(0), Rational(1)};
  }
  fail(ErrorCode::bad_input, "invalid side");
}

BaryLine perpendicular_line(const TriangleShape& t, const BaryPoint& p, Side side) {
  const BaryPoint dir = perp_direction(t, side).as_point();
  if (proportional(p, dir))
    fail(ErrorCode::degenerate_determinant,
         "point coincides with the perpendicular direction");
  return line_through(p, dir);
}

BaryPoint pedal_foot(const TriangleShape& t, const BaryPoint& p, Side side) {
  if (coordinate_sum(p) == 0)
    fail(ErrorCode::point_at_infinity, "pedal foot of a point at infinity");
  const Rational two(2);
  BaryPoint foot;
  switch (side) {
    case Side::BC:
      foot = {Rational(0),
              p.alpha * t.sc() + two * t.a2() * p.beta,
              p.alpha * t.sb() + two * t.a2() * p.gamma};
      break;
    case Side::CA:
      foot = {p.beta * t.sc() + two * t.b2() * p.alpha,
              Rational(0),
              p.beta * t.sa() + two * t.b2() * p.gamma};
      break;
    case Side::AB:
      foot = {p.gamma * t.sb() + two * t.c2() * p.alpha,
              p.gamma * t.sa() + two * t.c2() * p.beta,
              Rational(0)};
      break;
  }
  // The free coordinates sum to 2*side^2*(alpha+beta+gamma), nonzero here.
  return normalize(foot);
}

BaryPoint pedal_foot_by_intersection(const TriangleShape& t, const BaryPoint& p,
                                     Side side) {
  if (coordinate_sum(p) == 0)
    fail(ErrorCode::point_at_infinity, "pedal foot of a point at infinity");
  return normalize(line_intersection(perpendicular_line(t, p, side), side_line(side)));
}

PedalTriangle pedal_triangle(const TriangleShape& t, const BaryPoint& p) {
  return {pedal_foot(t, p, Side::BC), pedal_foot(t, p, Side::CA),
          pedal_foot(t, p, Side::AB)};
}

}  // namespace orthocubic
