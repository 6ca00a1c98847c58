#include "orthocubic/locus.hpp"

#include "orthocubic/errors.hpp"

namespace orthocubic {

PivotCoefficients pivot_coefficients(const TriangleShape& t) {
  const Rational two(2);
  return {two * t.a2() * t.sa() - t.sb() * t.sc(),
          two * t.b2() * t.sb() - t.sc() * t.sa(),
          two * t.c2() * t.sc() - t.sa() * t.sb()};
}

LocusCubic::LocusCubic(const TriangleShape& t)
    : shape_(t), k_(pivot_coefficients(t)) {
  ka_f_ = to_double(k_.k_a);
  kb_f_ = to_double(k_.k_b);
  kc_f_ = to_double(k_.k_c);
  a2_f_ = to_double(t.a2());
  b2_f_ = to_double(t.b2());
  c2_f_ = to_double(t.c2());
  a_f_ = to_double(t.a());
  b_f_ = to_double(t.b());
  c_f_ = to_double(t.c());
  std::tie(cos_a_, cos_b_, cos_c_) = t.cosines();
}

Rational LocusCubic::value(const BaryPoint& p) const {
  const Rational b2g2 = shape_.b2() * p.gamma * p.gamma;
  const Rational c2b2 = shape_.c2() * p.beta * p.beta;
  const Rational c2a2 = shape_.c2() * p.alpha * p.alpha;
  const Rational a2g2 = shape_.a2() * p.gamma * p.gamma;
  const Rational a2b2 = shape_.a2() * p.beta * p.beta;
  const Rational b2a2 = shape_.b2() * p.alpha * p.alpha;
  return p.alpha * (b2g2 - c2b2) * k_.k_a + p.beta * (c2a2 - a2g2) * k_.k_b +
         p.gamma * (a2b2 - b2a2) * k_.k_c;
}

double LocusCubic::value(const BaryPointF& p) const {
  return p.alpha * (b2_f_ * p.gamma * p.gamma - c2_f_ * p.beta * p.beta) * ka_f_ +
         p.beta * (c2_f_ * p.alpha * p.alpha - a2_f_ * p.gamma * p.gamma) * kb_f_ +
         p.gamma * (a2_f_ * p.beta * p.beta - b2_f_ * p.alpha * p.alpha) * kc_f_;
}

double LocusCubic::value_paper(const BaryPointF& p) const {
  const double qa = p.alpha / a_f_;
  const double qb = p.beta / b_f_;
  const double qc = p.gamma / c_f_;
  const double ra = p.alpha * p.alpha / a2_f_;
  const double rb = p.beta * p.beta / b2_f_;
  const double rc = p.gamma * p.gamma / c2_f_;
  return qa * (rc - rb) * (cos_a_ - cos_b_ * cos_c_) +
         qb * (ra - rc) * (cos_b_ - cos_a_ * cos_c_) +
         qc * (rb - ra) * (cos_c_ - cos_a_ * cos_b_);
}

double LocusCubic::value_paper(const BaryPoint& p) const {
  return value_paper(to_float(p));
}

double LocusCubic::value_distances(const OrientedDistances& d) const {
  return d.d_a * (d.d_c * d.d_c - d.d_b * d.d_b) * (cos_a_ - cos_b_ * cos_c_) +
         d.d_b * (d.d_a * d.d_a - d.d_c * d.d_c) * (cos_b_ - cos_a_ * cos_c_) +
         d.d_c * (d.d_b * d.d_b - d.d_a * d.d_a) * (cos_c_ - cos_a_ * cos_b_);
}

BaryPoint LocusCubic::third_intersection(const BaryPoint& p,
                                         const BaryPoint& q) const {
  if (value(p) != 0 || value(q) != 0)
    fail(ErrorCode::bad_input, "chord endpoints must lie on the cubic");
  if (proportional(p, q))
    fail(ErrorCode::coincident_points, "chord endpoints coincide");
  // With F(P) = F(Q) = 0 the restriction to sP + tQ is c1*s^2*t + c2*s*t^2,
  // so two evaluations recover the middle coefficients.
  const BaryPoint plus{p.alpha + q.alpha, p.beta + q.beta, p.gamma + q.gamma};
  const BaryPoint minus{p.alpha - q.alpha, p.beta - q.beta, p.gamma - q.gamma};
  const Rational f_plus = value(plus);
  const Rational f_minus = value(minus);
  const Rational c1 = (f_plus - f_minus) / 2;
  const Rational c2 = (f_plus + f_minus) / 2;
  if (c2 == 0)
    fail(ErrorCode::chord_degenerate,
         c1 == 0 ? "chord lies on the cubic" : "chord tangent at the second point");
  return canonical({c2 * p.alpha - c1 * q.alpha, c2 * p.beta - c1 * q.beta,
                    c2 * p.gamma - c1 * q.gamma});
}

namespace {

template <class S>
BaryPointT<S> isogonal_impl(const detail::ShapeCoeffs<S>& k, const BaryPointT<S>& p) {
  int zeros = (p.alpha == S(0)) + (p.beta == S(0)) + (p.gamma == S(0));
  if (zeros >= 2)
    fail(ErrorCode::undefined_at_vertex, "isogonal conjugate of a vertex");
  return {k.a2 * p.beta * p.gamma, k.b2 * p.gamma * p.alpha,
          k.c2 * p.alpha * p.beta};
}

}  // namespace

BaryPoint isogonal(const TriangleShape& t, const BaryPoint& p) {
  return isogonal_impl(detail::exact_coeffs(t), p);
}

BaryPointF isogonal(const TriangleShape& t, const BaryPointF& p) {
  return isogonal_impl(detail::float_coeffs(t), p);
}

Rational equilateral_locus_value(const BaryPoint& p) {
  return (p.beta - p.alpha) * (p.alpha - p.gamma) * (p.gamma - p.beta);
}

}  // namespace orthocubic
