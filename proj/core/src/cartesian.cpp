#include "orthocubic/cartesian.hpp"

#include <algorithm>
#include <cmath>

#include "orthocubic/errors.hpp"

namespace orthocubic {

CartesianPlacement CartesianPlacement::standard(const TriangleShape& t) {
  const double a = to_double(t.a());
  const double xa = to_double(t.sb()) / (2.0 * a);
  const double h = 2.0 * t.area() / a;
  return {{xa, h}, {0.0, 0.0}, {a, 0.0}};
}

double CartesianPlacement::diameter() const {
  auto dist = [](PointXY p, PointXY q) {
    return std::hypot(p.x - q.x, p.y - q.y);
  };
  return std::max({dist(b, c), dist(c, a), dist(a, b)});
}

namespace {

inline double to_double_scalar(const Rational& r) { return to_double(r); }
inline double to_double_scalar(double d) { return d; }

template <class S>
PointXY affine_combination(const CartesianPlacement& pl, const BaryPointT<S>& p) {
  const S sum = coordinate_sum(p);
  if (sum == S(0))
    fail(ErrorCode::point_at_infinity, "cartesian image of a point at infinity");
  const double al = to_double_scalar(p.alpha / sum);
  const double be = to_double_scalar(p.beta / sum);
  const double ga = to_double_scalar(p.gamma / sum);
  return {al * pl.a.x + be * pl.b.x + ga * pl.c.x,
          al * pl.a.y + be * pl.b.y + ga * pl.c.y};
}

}  // namespace

PointXY to_cartesian(const CartesianPlacement& placement, const BaryPoint& p) {
  return affine_combination(placement, p);
}

PointXY to_cartesian(const CartesianPlacement& placement, const BaryPointF& p) {
  return affine_combination(placement, p);
}

BaryPointF from_cartesian(const CartesianPlacement& placement, PointXY pt) {
  auto signed_area2 = [](PointXY p, PointXY q, PointXY r) {
    return (q.x - p.x) * (r.y - p.y) - (r.x - p.x) * (q.y - p.y);
  };
  const double total = signed_area2(placement.a, placement.b, placement.c);
  return {signed_area2(pt, placement.b, placement.c) / total,
          signed_area2(placement.a, pt, placement.c) / total,
          signed_area2(placement.a, placement.b, pt) / total};
}

namespace {

template <class S>
OrientedDistances distances_impl(const TriangleShape& t, const BaryPointT<S>& p) {
  const S sum = coordinate_sum(p);
  if (sum == S(0))
    fail(ErrorCode::point_at_infinity, "distances of a point at infinity");
  const double twice_area = 2.0 * t.area();
  return {twice_area * to_double_scalar(p.alpha / sum) / to_double(t.a()),
          twice_area * to_double_scalar(p.beta / sum) / to_double(t.b()),
          twice_area * to_double_scalar(p.gamma / sum) / to_double(t.c())};
}

}  // namespace

OrientedDistances oriented_distances(const TriangleShape& t, const BaryPoint& p) {
  return distances_impl(t, p);
}

OrientedDistances oriented_distances(const TriangleShape& t, const BaryPointF& p) {
  return distances_impl(t, p);
}

}  // namespace orthocubic
