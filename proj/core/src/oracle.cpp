#include "orthocubic/oracle.hpp"

#include <cmath>

#include "orthocubic/errors.hpp"

namespace orthocubic {

CartesianLine cartesian_line(PointXY a, PointXY b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len = std::hypot(dx, dy);
  if (len == 0.0)
    fail(ErrorCode::degenerate_segment, "line through coincident points");
  const double p = -dy / len;
  const double q = dx / len;
  return {p, q, -(p * a.x + q * a.y)};
}

double line_value(const CartesianLine& line, PointXY pt) {
  return line.p * pt.x + line.q * pt.y + line.r;
}

PointXY cart_foot(PointXY seg_a, PointXY seg_b, PointXY p) {
  const double dx = seg_b.x - seg_a.x;
  const double dy = seg_b.y - seg_a.y;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) fail(ErrorCode::degenerate_segment, "degenerate segment");
  const double s = ((p.x - seg_a.x) * dx + (p.y - seg_a.y) * dy) / len2;
  return {seg_a.x + s * dx, seg_a.y + s * dy};
}

namespace {

template <class P>
double residual_impl(const CartesianPlacement& pl, const P& p) {
  const PointXY pc = to_cartesian(pl, p);
  const PointXY foot_a = cart_foot(pl.b, pl.c, pc);
  const PointXY foot_b = cart_foot(pl.c, pl.a, pc);
  const PointXY foot_c = cart_foot(pl.a, pl.b, pc);
  CartesianLine cev[3];
  try {
    cev[0] = cartesian_line(pl.a, foot_a);
    cev[1] = cartesian_line(pl.b, foot_b);
    cev[2] = cartesian_line(pl.c, foot_c);
  } catch (const Error&) {
    fail(ErrorCode::degenerate_cevian, "cevian endpoints coincide");
  }
  const double det =
      cev[0].p * (cev[1].q * cev[2].r - cev[1].r * cev[2].q) -
      cev[0].q * (cev[1].p * cev[2].r - cev[1].r * cev[2].p) +
      cev[0].r * (cev[1].p * cev[2].q - cev[1].q * cev[2].p);
  return std::abs(det);
}

}  // namespace

double cart_concurrency_residual(const TriangleShape&,
                                 const CartesianPlacement& placement,
                                 const BaryPoint& p) {
  return residual_impl(placement, p);
}

double cart_concurrency_residual(const TriangleShape&,
                                 const CartesianPlacement& placement,
                                 const BaryPointF& p) {
  return residual_impl(placement, p);
}

bool oracle_is_perspective(const TriangleShape& t,
                           const CartesianPlacement& placement,
                           const BaryPoint& p, double tol) {
  return cart_concurrency_residual(t, placement, p) <= tol;
}

bool oracle_is_perspective(const TriangleShape& t,
                           const CartesianPlacement& placement,
                           const BaryPointF& p, double tol) {
  return cart_concurrency_residual(t, placement, p) <= tol;
}

}  // namespace orthocubic
