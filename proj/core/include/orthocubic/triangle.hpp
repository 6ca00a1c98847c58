#pragma once

#include <tuple>

#include "orthocubic/bary.hpp"
#include "orthocubic/rational.hpp"

namespace orthocubic {

enum class Side { BC, CA, AB };

inline const char* side_name(Side s) {
  switch (s) {
    case Side::BC: return "BC";
    case Side::CA: return "CA";
    case Side::AB: return "AB";
  }
  return "?";
}

// Reference triangle given by exact rational side lengths. All coefficient
// polynomials downstream are rational in the squared sides, so every paper
// identity stays testable with zero tolerance.
class TriangleShape {
 public:
  // Validates positivity and the strict triangle inequality;
  // throws Error(invalid_triangle).
  static TriangleShape from_sides(const Rational& a, const Rational& b,
                                  const Rational& c);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& a2() const { return a2_; }
  const Rational& b2() const { return b2_; }
  const Rational& c2() const { return c2_; }

  // sa = b^2 + c^2 - a^2 and cyclic; every perpendicularity coefficient in
  // this library is a polynomial in these and the squared sides.
  const Rational& sa() const { return sa_; }
  const Rational& sb() const { return sb_; }
  const Rational& sc() const { return sc_; }

  // 16 * Area^2 = 2a^2b^2 + 2b^2c^2 + 2c^2a^2 - a^4 - b^4 - c^4, exact.
  const Rational& area_sq16() const { return area16_; }

  double area() const;
  bool is_equilateral() const { return a_ == b_ && b_ == c_; }

  // (cos A, cos B, cos C), float path; each in (-1, 1).
  std::tuple<double, double, double> cosines() const;

 private:
  TriangleShape() = default;
  Rational a_, b_, c_;
  Rational a2_, b2_, c2_;
  Rational sa_, sb_, sc_;
  Rational area16_;
};

Rational area_sq16(const TriangleShape& t);

namespace detail {

// Coefficient view shared by the exact and float paths of the pedal,
// homology and locus polynomials.
template <class S>
struct ShapeCoeffs {
  S a2, b2, c2;
  S sa, sb, sc;
};

inline ShapeCoeffs<Rational> exact_coeffs(const TriangleShape& t) {
  return {t.a2(), t.b2(), t.c2(), t.sa(), t.sb(), t.sc()};
}

inline ShapeCoeffs<double> float_coeffs(const TriangleShape& t) {
  return {to_double(t.a2()), to_double(t.b2()), to_double(t.c2()),
          to_double(t.sa()), to_double(t.sb()), to_double(t.sc())};
}

template <class S>
ShapeCoeffs<S> coeffs_for(const TriangleShape& t);

template <>
inline ShapeCoeffs<Rational> coeffs_for<Rational>(const TriangleShape& t) {
  return exact_coeffs(t);
}

template <>
inline ShapeCoeffs<double> coeffs_for<double>(const TriangleShape& t) {
  return float_coeffs(t);
}

}  // namespace detail

}  // namespace orthocubic
