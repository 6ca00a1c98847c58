#include <doctest.h>

#include <cmath>

#include "orthocubic/errors.hpp"
#include "orthocubic/homology.hpp"
#include "orthocubic/locus_points.hpp"
#include "orthocubic/oracle.hpp"
#include "support.hpp"

using namespace orthocubic;

namespace {

TriangleShape shape654() {
  return TriangleShape::from_sides(Rational(6), Rational(5), Rational(4));
}

BaryPoint pt(int a, int b, int g) {
  return {Rational(a), Rational(b), Rational(g)};
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("cartesian foot of a perpendicular") {
  const PointXY f1 = cart_foot({0, 0}, {1, 0}, {0.3, 5});
  CHECK(f1.x == doctest::Approx(0.3));
  CHECK(f1.y == doctest::Approx(0.0));

  const PointXY f2 = cart_foot({0, 0}, {1, 1}, {1, 0});
  CHECK(f2.x == doctest::Approx(0.5));
  CHECK(f2.y == doctest::Approx(0.5));

  // incircle contact point of (6,5,4) on BC
  const CartesianPlacement pl = CartesianPlacement::standard(shape654());
  const PointXY inc = to_cartesian(pl, pt(6, 5, 4));
  const PointXY f3 = cart_foot(pl.b, pl.c, inc);
  CHECK(f3.x == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(f3.y == doctest::Approx(0.0));

  CHECK_THROWS_AS(cart_foot({1, 2}, {1, 2}, {0, 0}), Error);
}

TEST_CASE("projection displacement is orthogonal to the line") {
  SeededRng rng(121);
  for (int i = 0; i < 200; ++i) {
    const PointXY a{rng.next_in(-50, 50) / 4.0, rng.next_in(-50, 50) / 4.0};
    const PointXY b{rng.next_in(-50, 50) / 4.0, rng.next_in(-50, 50) / 4.0};
    const PointXY p{rng.next_in(-50, 50) / 4.0, rng.next_in(-50, 50) / 4.0};
    if (a == b) continue;
    const PointXY f = cart_foot(a, b, p);
    const double dot =
        (f.x - p.x) * (b.x - a.x) + (f.y - p.y) * (b.y - a.y);
    const double scale = std::hypot(b.x - a.x, b.y - a.y) *
                         (std::hypot(p.x - a.x, p.y - a.y) + 1.0);
    CHECK(std::abs(dot) <= 1e-12 * scale);
  }
}

TEST_CASE("unit-normalized cartesian lines") {
  const CartesianLine line = cartesian_line({0, 0}, {3, 4});
  CHECK(line.p * line.p + line.q * line.q == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(line_value(line, {0, 0})) <= 1e-15);
  CHECK(std::abs(line_value(line, {3, 4})) <= 1e-14);
  CHECK_THROWS_AS(cartesian_line({1, 1}, {1, 1}), Error);
}

TEST_CASE("concurrency residuals of named points") {
  const TriangleShape eq = TriangleShape::from_sides(Rational(1), Rational(1), Rational(1));
  const CartesianPlacement eq_pl = CartesianPlacement::standard(eq);
  CHECK(cart_concurrency_residual(eq, eq_pl, pt(1, 1, 1)) <= 1e-14);

  const TriangleShape t = shape654();
  const CartesianPlacement pl = CartesianPlacement::standard(t);
  CHECK(cart_concurrency_residual(t, pl, pt(6, 5, 4)) <= 1e-12);
  CHECK(cart_concurrency_residual(t, pl, pt(1, 1, 1)) > 1e-3);
}

TEST_CASE("perspectivity judgements at 1e-9") {
  const TriangleShape t = shape654();
  const CartesianPlacement pl = CartesianPlacement::standard(t);
  CHECK(oracle_is_perspective(t, pl, pt(27, 5, 3)));   // orthocenter
  CHECK(oracle_is_perspective(t, pl, pt(4, 15, 16)));  // circumcenter

  // random interior points miss the curve (fixed seed set)
  SeededRng rng(122);
  for (int i = 0; i < 50; ++i) {
    const BaryPoint p = random_interior_point(rng);
    if (LocusCubic(t).value(p) == 0) continue;
    CHECK(!oracle_is_perspective(t, pl, p));
  }
}

TEST_CASE("oracle agrees with exact membership on both sides of the gap") {
  SeededRng rng(123);
  const TriangleShape t = shape654();
  const LocusCubic cubic(t);
  const CartesianPlacement pl = CartesianPlacement::standard(t);
  const double k_scale = 1305.0;

  // exact members have residual below threshold
  for (const BaryPoint& p : chord_locus_points(cubic, 100))
    CHECK(cart_concurrency_residual(t, pl, p) < 1e-9);

  // points clearly off the curve have residual above threshold
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const BaryPoint p = testing::random_box_point(rng);
    const double scaled = std::abs(cubic.value(to_float(p))) / k_scale;
    if (scaled <= 1e-6) continue;
    ++checked;
    CHECK(cart_concurrency_residual(t, pl, p) > 1e-9);
  }
  CHECK(checked > 900);
}

}  // TEST_SUITE
