#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orthocubic/centers.hpp"
#include "orthocubic/errors.hpp"
#include "orthocubic/io.hpp"
#include "orthocubic/trace.hpp"

using namespace orthocubic;

namespace {

TriangleShape shape654() {
  return TriangleShape::from_sides(Rational(6), Rational(5), Rational(4));
}

TriangleShape unit_equilateral() {
  return TriangleShape::from_sides(Rational(1), Rational(1), Rational(1));
}

double dist_point_line(PointXY p, PointXY a, PointXY b) {
  const double ux = b.x - a.x, uy = b.y - a.y;
  return std::abs(ux * (p.y - a.y) - uy * (p.x - a.x)) / std::hypot(ux, uy);
}

double min_dist_to_curve(const TracedCurve& curve, PointXY p) {
  double best = 1e300;
  for (const Polyline& line : curve.polylines)
    for (const PointXY& v : line)
      best = std::min(best, std::hypot(v.x - p.x, v.y - p.y));
  return best;
}

double cell_diagonal(const TracedCurve& curve) {
  const double dx = (curve.bbox.x1 - curve.bbox.x0) / (curve.resolution - 1);
  const double dy = (curve.bbox.y1 - curve.bbox.y0) / (curve.resolution - 1);
  return std::hypot(dx, dy);
}

}  // namespace

TEST_SUITE("trace") {

TEST_CASE("input validation") {
  const LocusCubic cubic(shape654());
  CHECK_THROWS_AS(trace(cubic, Bbox{0, 0, 1, 1}, 1), Error);
  CHECK_THROWS_AS(trace(cubic, Bbox{1, 0, 0, 1}, 16), Error);
}

TEST_CASE("resolution 2 with constant corner signs yields an empty curve") {
  const LocusCubic cubic(shape654());
  const CartesianPlacement pl = CartesianPlacement::standard(cubic.triangle());
  const Bbox far{40.0, 40.0, 40.5, 40.5};
  const double corners[4] = {
      cubic.value(from_cartesian(pl, {far.x0, far.y0})),
      cubic.value(from_cartesian(pl, {far.x1, far.y0})),
      cubic.value(from_cartesian(pl, {far.x0, far.y1})),
      cubic.value(from_cartesian(pl, {far.x1, far.y1}))};
  REQUIRE(((corners[0] > 0) == (corners[1] > 0)));
  REQUIRE(((corners[0] > 0) == (corners[2] > 0)));
  REQUIRE(((corners[0] > 0) == (corners[3] > 0)));
  CHECK(trace(cubic, far, 2).polylines.empty());
}

TEST_CASE("deterministic output for fixed inputs") {
  const LocusCubic cubic(shape654());
  const Bbox box = default_trace_bbox(CartesianPlacement::standard(cubic.triangle()));
  const TracedCurve one = trace(cubic, box, 128);
  const TracedCurve two = trace(cubic, box, 128);
  REQUIRE(one.polylines.size() == two.polylines.size());
  for (std::size_t i = 0; i < one.polylines.size(); ++i) {
    REQUIRE(one.polylines[i].size() == two.polylines[i].size());
    for (std::size_t k = 0; k < one.polylines[i].size(); ++k)
      CHECK(one.polylines[i][k] == two.polylines[i][k]);
  }
}

TEST_CASE("equilateral trace follows the three medians") {
  const LocusCubic cubic(unit_equilateral());
  const CartesianPlacement pl = CartesianPlacement::standard(cubic.triangle());
  const TracedCurve curve = trace(cubic, default_trace_bbox(pl), 256);
  REQUIRE(!curve.polylines.empty());
  const double tol = cell_diagonal(curve);

  const PointXY mid_bc{(pl.b.x + pl.c.x) / 2, (pl.b.y + pl.c.y) / 2};
  const PointXY mid_ca{(pl.c.x + pl.a.x) / 2, (pl.c.y + pl.a.y) / 2};
  const PointXY mid_ab{(pl.a.x + pl.b.x) / 2, (pl.a.y + pl.b.y) / 2};
  const struct {
    PointXY from, to;
  } medians[] = {{pl.a, mid_bc}, {pl.b, mid_ca}, {pl.c, mid_ab}};

  // every traced vertex sits on one of the medians
  for (const Polyline& line : curve.polylines) {
    for (const PointXY& v : line) {
      double d = 1e300;
      for (const auto& m : medians)
        d = std::min(d, dist_point_line(v, m.from, m.to));
      CHECK(d <= tol);
    }
  }

  // and each median is actually traced end to end inside the window
  for (const auto& m : medians) {
    for (int step = 0; step <= 40; ++step) {
      const double s = step / 40.0;
      const PointXY sample{m.from.x + s * (m.to.x - m.from.x),
                           m.from.y + s * (m.to.y - m.from.y)};
      CHECK(min_dist_to_curve(curve, sample) <= tol);
    }
  }
}

TEST_CASE("scalene trace passes through the catalog members") {
  const LocusCubic cubic(shape654());
  const CartesianPlacement pl = CartesianPlacement::standard(cubic.triangle());
  const TracedCurve curve = trace(cubic, default_trace_bbox(pl), 256);
  const double tol = cell_diagonal(curve);
  for (CenterName name :
       {CenterName::orthocenter, CenterName::incenter, CenterName::circumcenter,
        CenterName::vertex_a, CenterName::vertex_b, CenterName::vertex_c}) {
    const PointXY pt = to_cartesian(pl, known_center(cubic.triangle(), name));
    CHECK(min_dist_to_curve(curve, pt) <= tol);
  }
}

TEST_CASE("emitted vertices respect the cell-local sign-change bound") {
  const LocusCubic cubic(shape654());
  const CartesianPlacement pl = CartesianPlacement::standard(cubic.triangle());
  const Bbox box = default_trace_bbox(pl);
  const int n = 64;
  const TracedCurve curve = trace(cubic, box, n);
  const double dx = (box.x1 - box.x0) / (n - 1);
  const double dy = (box.y1 - box.y0) / (n - 1);
  auto field = [&](double x, double y) {
    return cubic.value(from_cartesian(pl, {x, y}));
  };
  for (const Polyline& line : curve.polylines) {
    for (const PointXY& v : line) {
      const double fi = (v.x - box.x0) / dx;
      const double fj = (v.y - box.y0) / dy;
      const bool on_row = std::abs(fj - std::round(fj)) < 1e-9;
      double f1, f2;
      if (on_row) {
        const int j = static_cast<int>(std::round(fj));
        const int i = std::min(static_cast<int>(std::floor(fi)), n - 2);
        f1 = field(box.x0 + i * dx, box.y0 + j * dy);
        f2 = field(box.x0 + (i + 1) * dx, box.y0 + j * dy);
      } else {
        const int i = static_cast<int>(std::round(fi));
        const int j = std::min(static_cast<int>(std::floor(fj)), n - 2);
        f1 = field(box.x0 + i * dx, box.y0 + j * dy);
        f2 = field(box.x0 + i * dx, box.y0 + (j + 1) * dy);
      }
      const double bound = 2.0 * std::max(std::abs(f1), std::abs(f2)) + 1e-12;
      CHECK(std::abs(field(v.x, v.y)) <= bound);
    }
  }
}

TEST_CASE("CSV and SVG serialization") {
  const LocusCubic cubic(shape654());
  const TracedCurve curve =
      trace(cubic, default_trace_bbox(CartesianPlacement::standard(cubic.triangle())), 64);

  std::ostringstream csv1, csv2;
  write_csv(curve, csv1);
  write_csv(curve, csv2);
  const std::string csv = csv1.str();
  CHECK(csv == csv2.str());
  CHECK(csv.substr(0, 16) == "polyline_id,x,y\n");
  CHECK(csv.find('\r') == std::string::npos);
  std::size_t vertex_count = 0;
  for (const Polyline& line : curve.polylines) vertex_count += line.size();
  const std::size_t rows =
      static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n'));
  CHECK(rows == vertex_count + 1);

  std::ostringstream svg1, svg2;
  write_svg(curve, cubic, svg1);
  write_svg(curve, cubic, svg2);
  CHECK(svg1.str() == svg2.str());
  const std::string& svg = svg1.str();
  CHECK(svg.find("<?xml") == 0);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(svg.find("viewBox=\"") != std::string::npos);
  std::size_t paths = 0;
  for (std::size_t pos = svg.find("<path"); pos != std::string::npos;
       pos = svg.find("<path", pos + 1))
    ++paths;
  CHECK(paths == curve.polylines.size() + 1);  // one per polyline + triangle
  for (const char* label : {">H<", ">I<", ">O<", ">G<"})
    CHECK(svg.find(label) != std::string::npos);
}

}  // TEST_SUITE
