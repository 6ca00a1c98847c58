#include "orthocubic/io.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include "orthocubic/centers.hpp"

namespace orthocubic {

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

void write_csv(const TracedCurve& curve, std::ostream& out) {
  out << "polyline_id,x,y\n";
  for (std::size_t id = 0; id < curve.polylines.size(); ++id) {
    for (const PointXY& pt : curve.polylines[id]) {
      out << id << ',' << format_double(pt.x) << ',' << format_double(pt.y)
          << '\n';
    }
  }
}

namespace {

void path_data(const Polyline& line, std::ostream& out) {
  for (std::size_t i = 0; i < line.size(); ++i) {
    out << (i == 0 ? "M " : " L ") << format_double(line[i].x) << ' '
        << format_double(line[i].y);
  }
}

}  // namespace

void write_svg(const TracedCurve& curve, const LocusCubic& cubic,
               std::ostream& out) {
  const Bbox& box = curve.bbox;
  const double w = box.x1 - box.x0;
  const double h = box.y1 - box.y0;
  const double stroke = std::max(w, h) / 400.0;
  const CartesianPlacement pl = CartesianPlacement::standard(cubic.triangle());

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << format_double(box.x0) << ' ' << format_double(box.y0) << ' '
      << format_double(w) << ' ' << format_double(h) << "\">\n";
  // Flip to the usual y-up drawing frame inside the viewBox.
  out << "<g transform=\"matrix(1 0 0 -1 0 " << format_double(box.y0 + box.y1)
      << ")\">\n";

  out << "<path fill=\"none\" stroke=\"#888888\" stroke-width=\""
      << format_double(stroke) << "\" d=\"";
  out << "M " << format_double(pl.a.x) << ' ' << format_double(pl.a.y);
  out << " L " << format_double(pl.b.x) << ' ' << format_double(pl.b.y);
  out << " L " << format_double(pl.c.x) << ' ' << format_double(pl.c.y);
  out << " Z\"/>\n";

  for (const Polyline& line : curve.polylines) {
    out << "<path fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\""
        << format_double(stroke) << "\" d=\"";
    path_data(line, out);
    out << "\"/>\n";
  }

  const CenterName marked[] = {CenterName::orthocenter, CenterName::incenter,
                               CenterName::circumcenter, CenterName::centroid};
  const double r = std::max(w, h) / 150.0;
  const double font = std::max(w, h) / 30.0;
  for (CenterName name : marked) {
    const PointXY pt = to_cartesian(pl, known_center(cubic.triangle(), name));
    out << "<circle cx=\"" << format_double(pt.x) << "\" cy=\""
        << format_double(pt.y) << "\" r=\"" << format_double(r)
        << "\" fill=\"#c03020\"/>\n";
    // Text is drawn in a re-flipped frame so the glyphs stay upright.
    out << "<text x=\"" << format_double(pt.x + 1.5 * r) << "\" y=\""
        << format_double(-(pt.y + 1.5 * r)) << "\" font-size=\""
        << format_double(font)
        << "\" fill=\"#c03020\" transform=\"scale(1,-1)\">" << center_key(name)
        << "</text>\n";
  }
  out << "</g>\n</svg>\n";
}

}  // namespace orthocubic
