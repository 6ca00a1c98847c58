#pragma once

#include <array>
#include <string>

#include "orthocubic/errors.hpp"
#include "orthocubic/rational.hpp"

namespace orthocubic {

// Homogeneous barycentric point (alpha : beta : gamma). S is Rational on the
// exact path and double on the float path; the algebra below is shared.
template <class S>
struct BaryPointT {
  S alpha{};
  S beta{};
  S gamma{};

  friend bool operator==(const BaryPointT&, const BaryPointT&) = default;
};

// Homogeneous line l*x + m*y + n*z = 0.
template <class S>
struct BaryLineT {
  S l{};
  S m{};
  S n{};

  friend bool operator==(const BaryLineT&, const BaryLineT&) = default;
};

using BaryPoint = BaryPointT<Rational>;
using BaryPointF = BaryPointT<double>;
using BaryLine = BaryLineT<Rational>;
using BaryLineF = BaryLineT<double>;

template <class S>
S coordinate_sum(const BaryPointT<S>& p) {
  return p.alpha + p.beta + p.gamma;
}

template <class S>
bool is_zero_triple(const BaryPointT<S>& p) {
  return p.alpha == S(0) && p.beta == S(0) && p.gamma == S(0);
}

namespace detail {

template <class S>
std::array<S, 3> cross(const std::array<S, 3>& u, const std::array<S, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1],
          u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

template <class S>
bool all_zero(const std::array<S, 3>& t) {
  return t[0] == S(0) && t[1] == S(0) && t[2] == S(0);
}

}  // namespace detail

// Absolute barycentric form: same projective point, coordinates summing to 1.
template <class S>
BaryPointT<S> normalize(const BaryPointT<S>& p) {
  const S sum = coordinate_sum(p);
  if (sum == S(0))
    fail(ErrorCode::point_at_infinity, "cannot normalize a point at infinity");
  return {p.alpha / sum, p.beta / sum, p.gamma / sum};
}

template <class S>
bool proportional(const BaryPointT<S>& p, const BaryPointT<S>& q) {
  return detail::all_zero(detail::cross<S>({p.alpha, p.beta, p.gamma},
                                           {q.alpha, q.beta, q.gamma}));
}

template <class S>
BaryLineT<S> line_through(const BaryPointT<S>& p, const BaryPointT<S>& q) {
  auto c = detail::cross<S>({p.alpha, p.beta, p.gamma},
                            {q.alpha, q.beta, q.gamma});
  if (detail::all_zero(c))
    fail(ErrorCode::coincident_points, "line through coincident points");
  return {c[0], c[1], c[2]};
}

template <class S>
BaryPointT<S> line_intersection(const BaryLineT<S>& a, const BaryLineT<S>& b) {
  auto c = detail::cross<S>({a.l, a.m, a.n}, {b.l, b.m, b.n});
  if (detail::all_zero(c))
    fail(ErrorCode::coincident_lines, "intersection of coincident lines");
  return {c[0], c[1], c[2]};
}

// Value of the line form at a point; zero iff incident.
template <class S>
S incidence(const BaryLineT<S>& line, const BaryPointT<S>& p) {
  return line.l * p.alpha + line.m * p.beta + line.n * p.gamma;
}

// 3x3 determinant of line coefficients; zero iff the lines are concurrent
// or some pair coincides.
template <class S>
S concurrency_det(const BaryLineT<S>& a, const BaryLineT<S>& b,
                  const BaryLineT<S>& c) {
  return a.l * (b.m * c.n - b.n * c.m) - a.m * (b.l * c.n - b.n * c.l) +
         a.n * (b.l * c.m - b.m * c.l);
}

BaryPointF to_float(const BaryPoint& p);

// Unique representative of a rational projective point: coprime integers,
// first nonzero coordinate positive. Used for dedup and serialization.
BaryPoint canonical(const BaryPoint& p);

// "x:y:z" over the canonical representative.
std::string canonical_string(const BaryPoint& p);

}  // namespace orthocubic
