#include <doctest.h>

#include <cmath>

#include "orthocubic/cartesian.hpp"
#include "orthocubic/errors.hpp"
#include "orthocubic/locus_points.hpp"
#include "orthocubic/triangle.hpp"

using namespace orthocubic;

namespace {

TriangleShape shape654() {
  return TriangleShape::from_sides(Rational(6), Rational(5), Rational(4));
}

BaryPoint pt(const Rational& a, const Rational& b, const Rational& g) {
  return {a, b, g};
}

}  // namespace

TEST_SUITE("triangle") {

TEST_CASE("construction enforces the strict triangle inequality") {
  CHECK_THROWS_AS(TriangleShape::from_sides(Rational(1), Rational(1), Rational(3)), Error);
  CHECK_THROWS_AS(TriangleShape::from_sides(Rational(1), Rational(1), Rational(2)), Error);
  CHECK_THROWS_AS(TriangleShape::from_sides(Rational(0), Rational(1), Rational(1)), Error);
  CHECK_THROWS_AS(TriangleShape::from_sides(Rational(-3), Rational(4), Rational(5)), Error);
  CHECK_NOTHROW(TriangleShape::from_sides(Rational(1), Rational(1), Rational(1)));
}

TEST_CASE("sixteen times squared area") {
  CHECK(TriangleShape::from_sides(Rational(1), Rational(1), Rational(1)).area_sq16() ==
        Rational(3));
  CHECK(shape654().area_sq16() == Rational(1575));
  CHECK(TriangleShape::from_sides(Rational(3), Rational(4), Rational(5)).area_sq16() ==
        Rational(576));
}

TEST_CASE("cosines by the cosine theorem") {
  auto [ca, cb, cc] = shape654().cosines();
  CHECK(ca == doctest::Approx(1.0 / 8).epsilon(1e-15));
  CHECK(cb == doctest::Approx(9.0 / 16).epsilon(1e-15));
  CHECK(cc == doctest::Approx(3.0 / 4).epsilon(1e-15));

  auto [ea, eb, ec] = TriangleShape::from_sides(Rational(1), Rational(1), Rational(1)).cosines();
  CHECK(ea == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(eb == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(ec == doctest::Approx(0.5).epsilon(1e-15));

  auto [ra, rb, rc] = TriangleShape::from_sides(Rational(3), Rational(4), Rational(5)).cosines();
  CHECK(rc == doctest::Approx(0.0));
  CHECK(ra > 0);
  CHECK(rb > 0);
}

TEST_CASE("standard placement reproduces the side lengths") {
  SeededRng rng(55);
  for (int i = 0; i < 100; ++i) {
    const TriangleShape t = random_triangle(rng);
    const CartesianPlacement pl = CartesianPlacement::standard(t);
    CHECK(pl.b.x == 0.0);
    CHECK(pl.b.y == 0.0);
    CHECK(pl.c.y == 0.0);
    CHECK(pl.a.y > 0.0);
    auto dist = [](PointXY p, PointXY q) { return std::hypot(p.x - q.x, p.y - q.y); };
    CHECK(std::abs(dist(pl.b, pl.c) - to_double(t.a())) <= 1e-12 * to_double(t.a()));
    CHECK(std::abs(dist(pl.c, pl.a) - to_double(t.b())) <= 1e-12 * to_double(t.b()));
    CHECK(std::abs(dist(pl.a, pl.b) - to_double(t.c())) <= 1e-12 * to_double(t.c()));
  }
}

TEST_CASE("cartesian embedding of named points") {
  const TriangleShape t = shape654();
  const CartesianPlacement pl = CartesianPlacement::standard(t);

  const PointXY incenter = to_cartesian(pl, pt(Rational(6), Rational(5), Rational(4)));
  CHECK(incenter.x == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(incenter.y == doctest::Approx(1.3228756555322954).epsilon(1e-14));

  const PointXY a = to_cartesian(pl, pt(Rational(1), Rational(0), Rational(0)));
  CHECK(a.x == doctest::Approx(pl.a.x));
  CHECK(a.y == doctest::Approx(pl.a.y));

  const PointXY mid_bc = to_cartesian(pl, pt(Rational(0), Rational(1, 2), Rational(1, 2)));
  CHECK(mid_bc.x == doctest::Approx(3.0));
  CHECK(mid_bc.y == doctest::Approx(0.0));

  CHECK_THROWS_AS(to_cartesian(pl, pt(Rational(1), Rational(-1), Rational(0))), Error);
}

TEST_CASE("from_cartesian round trip") {
  SeededRng rng(56);
  const TriangleShape t = shape654();
  const CartesianPlacement pl = CartesianPlacement::standard(t);
  for (int i = 0; i < 200; ++i) {
    const BaryPoint p = normalize(random_point(rng));
    const BaryPointF back = from_cartesian(pl, to_cartesian(pl, p));
    CHECK(std::abs(back.alpha - to_double(p.alpha)) <= 1e-10);
    CHECK(std::abs(back.beta - to_double(p.beta)) <= 1e-10);
    CHECK(std::abs(back.gamma - to_double(p.gamma)) <= 1e-10);
  }
}

TEST_CASE("oriented distances of named points") {
  const TriangleShape t = shape654();
  const double r = std::sqrt(7.0) / 2.0;

  const OrientedDistances inc = oriented_distances(t, pt(Rational(6), Rational(5), Rational(4)));
  CHECK(inc.d_a == doctest::Approx(r).epsilon(1e-12));
  CHECK(inc.d_b == doctest::Approx(r).epsilon(1e-12));
  CHECK(inc.d_c == doctest::Approx(r).epsilon(1e-12));

  const double h_a = 2.0 * t.area() / to_double(t.a());
  const OrientedDistances va = oriented_distances(t, pt(Rational(1), Rational(0), Rational(0)));
  CHECK(va.d_a == doctest::Approx(h_a).epsilon(1e-14));
  CHECK(va.d_b == 0.0);
  CHECK(va.d_c == 0.0);

  const OrientedDistances g = oriented_distances(t, pt(Rational(1), Rational(1), Rational(1)));
  CHECK(g.d_a == doctest::Approx(h_a / 3.0).epsilon(1e-14));

  CHECK_THROWS_AS(oriented_distances(t, pt(Rational(1), Rational(-1), Rational(0))), Error);
}

TEST_CASE("a*dA + b*dB + c*dC equals twice the area") {
  SeededRng rng(57);
  for (int i = 0; i < 50; ++i) {
    const TriangleShape t = random_triangle(rng);
    const double twice_area = 2.0 * t.area();
    for (int k = 0; k < 10; ++k) {
      const OrientedDistances d = oriented_distances(t, random_point(rng));
      const double lhs = to_double(t.a()) * d.d_a + to_double(t.b()) * d.d_b +
                         to_double(t.c()) * d.d_c;
      CHECK(std::abs(lhs - twice_area) <= 1e-10 * twice_area);
    }
  }
}

}  // TEST_SUITE
