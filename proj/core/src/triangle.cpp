#include "orthocubic/triangle.hpp"

#include <cmath>

#include "orthocubic/errors.hpp"

namespace orthocubic {

TriangleShape TriangleShape::from_sides(const Rational& a, const Rational& b,
                                        const Rational& c) {
  if (a <= 0 || b <= 0 || c <= 0)
    fail(ErrorCode::invalid_triangle, "side lengths must be positive");
  if (a + b <= c || b + c <= a || c + a <= b)
    fail(ErrorCode::invalid_triangle, "triangle inequality violated");
  TriangleShape t;
  t.a_ = a;
  t.b_ = b;
  t.c_ = c;
  t.a2_ = a * a;
  t.b2_ = b * b;
  t.c2_ = c * c;
  t.sa_ = t.b2_ + t.c2_ - t.a2_;
  t.sb_ = t.a2_ + t.c2_ - t.b2_;
  t.sc_ = t.a2_ + t.b2_ - t.c2_;
  t.area16_ = 2 * (t.a2_ * t.b2_ + t.b2_ * t.c2_ + t.c2_ * t.a2_) -
              t.a2_ * t.a2_ - t.b2_ * t.b2_ - t.c2_ * t.c2_;
  return t;
}

double TriangleShape::area() const {
  return std::sqrt(to_double(area16_)) / 4.0;
}

std::tuple<double, double, double> TriangleShape::cosines() const {
  const double ad = to_double(a_), bd = to_double(b_), cd = to_double(c_);
  return {to_double(sa_) / (2.0 * bd * cd),
          to_double(sb_) / (2.0 * ad * cd),
          to_double(sc_) / (2.0 * ad * bd)};
}

Rational area_sq16(const TriangleShape& t) { return t.area_sq16(); }

}  // namespace orthocubic
