#include "orthocubic/homology.hpp"

#include <cmath>

#include "orthocubic/errors.hpp"
#include "orthocubic/pedal.hpp"

namespace orthocubic {

namespace {

template <class S>
struct RatioParts {
  S num;  // negated ratio numerator
  S den;
};

template <class S>
RatioParts<S> ratio_parts(const detail::ShapeCoeffs<S>& k, const BaryPointT<S>& p,
                          Side side) {
  const S two(2);
  switch (side) {
    case Side::BC:
      return {p.alpha * k.sb + two * k.a2 * p.gamma,
              p.alpha * k.sc + two * k.a2 * p.beta};
    case Side::CA:
      return {p.beta * k.sc + two * k.b2 * p.alpha,
              p.beta * k.sa + two * k.b2 * p.gamma};
    case Side::AB:
      return {p.gamma * k.sa + two * k.c2 * p.beta,
              p.gamma * k.sb + two * k.c2 * p.alpha};
  }
  fail(ErrorCode::bad_input, "invalid side");
}

template <class S>
S ratio_impl(const TriangleShape& t, const BaryPointT<S>& p, Side side) {
  if (coordinate_sum(p) == S(0))
    fail(ErrorCode::point_at_infinity, "cevian ratio of a point at infinity");
  const auto parts = ratio_parts(detail::coeffs_for<S>(t), p, side);
  if (parts.den == S(0) || parts.num == S(0))
    fail(ErrorCode::foot_at_vertex,
         std::string("pedal foot on side ") + side_name(side) + " lies on a vertex");
  return -parts.num / parts.den;
}

template <class S>
S product_impl(const TriangleShape& t, const BaryPointT<S>& p) {
  return ratio_impl(t, p, Side::BC) * ratio_impl(t, p, Side::CA) *
         ratio_impl(t, p, Side::AB);
}

bool is_vertex(const BaryPoint& p) {
  int zeros = (p.alpha == 0) + (p.beta == 0) + (p.gamma == 0);
  return zeros == 2;
}

}  // namespace

CevaRatio cevian_ratio(const TriangleShape& t, const BaryPoint& p, Side side) {
  return ratio_impl(t, p, side);
}

double cevian_ratio(const TriangleShape& t, const BaryPointF& p, Side side) {
  return ratio_impl(t, p, side);
}

Rational ceva_product(const TriangleShape& t, const BaryPoint& p) {
  return product_impl(t, p);
}

double ceva_product(const TriangleShape& t, const BaryPointF& p) {
  return product_impl(t, p);
}

BaryPoint perspector(const TriangleShape& t, const BaryPoint& p) {
  if (is_vertex(p))
    fail(ErrorCode::degenerate_cevian, "cevians of a vertex are not independent");
  if (ceva_product(t, p) != -1)
    fail(ErrorCode::not_perspective, "Ceva product differs from -1");
  const PedalTriangle feet = pedal_triangle(t, p);
  const BaryPoint vertex_a{Rational(1), Rational(0), Rational(0)};
  const BaryPoint vertex_b{Rational(0), Rational(1), Rational(0)};
  const BaryPoint vertex_c{Rational(0), Rational(0), Rational(1)};
  const BaryLine cev_a = line_through(vertex_a, feet.foot_a);
  const BaryLine cev_b = line_through(vertex_b, feet.foot_b);
  const BaryPoint common = line_intersection(cev_a, cev_b);
  const BaryLine cev_c = line_through(vertex_c, feet.foot_c);
  if (incidence(cev_c, common) != 0)
    fail(ErrorCode::not_perspective, "third cevian misses the common point");
  return canonical(common);
}

PerspectivityCheck check_orthohomological(const TriangleShape& t, const BaryPoint& p) {
  if (is_zero_triple(p)) return {false, "zero triple"};
  if (coordinate_sum(p) == 0) return {false, "point at infinity"};
  try {
    return {ceva_product(t, p) == -1, ""};
  } catch (const Error& e) {
    return {false, error_code_name(e.code())};
  }
}

bool is_orthohomological(const TriangleShape& t, const BaryPoint& p) {
  return check_orthohomological(t, p).perspective;
}

bool is_orthohomological(const TriangleShape& t, const BaryPointF& p, double tol) {
  if (coordinate_sum(p) == 0.0) return false;
  try {
    const double product = ceva_product(t, p);
    return std::isfinite(product) && std::abs(product + 1.0) <= tol;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace orthocubic
