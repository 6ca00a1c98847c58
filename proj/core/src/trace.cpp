#include "orthocubic/trace.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_map>

#include "orthocubic/errors.hpp"

namespace orthocubic {

Bbox default_trace_bbox(const CartesianPlacement& pl) {
  const double min_x = std::min({pl.a.x, pl.b.x, pl.c.x});
  const double max_x = std::max({pl.a.x, pl.b.x, pl.c.x});
  const double min_y = std::min({pl.a.y, pl.b.y, pl.c.y});
  const double max_y = std::max({pl.a.y, pl.b.y, pl.c.y});
  const double cx = (min_x + max_x) / 2.0;
  const double cy = (min_y + max_y) / 2.0;
  const double hx = (max_x - min_x) / 2.0 * 1.5;
  const double hy = (max_y - min_y) / 2.0 * 1.5;
  return {cx - hx, cy - hy, cx + hx, cy + hy};
}

namespace {

// Crossing node on a grid edge: kind 0 = horizontal (between column i and
// i+1 at row j), kind 1 = vertical (between row j and j+1 at column i).
std::int64_t node_id(int kind, int i, int j, int n) {
  return (static_cast<std::int64_t>(kind) * n + j) * n + i;
}

struct Segment {
  std::int64_t a;
  std::int64_t b;
};

}  // namespace

TracedCurve trace(const LocusCubic& cubic, const Bbox& bbox, int resolution) {
  if (resolution < 2) fail(ErrorCode::bad_input, "resolution out of range");
  if (!bbox.valid()) fail(ErrorCode::bad_input, "degenerate bounding box");

  const int n = resolution;
  const CartesianPlacement pl = CartesianPlacement::standard(cubic.triangle());
  const double dx = (bbox.x1 - bbox.x0) / (n - 1);
  const double dy = (bbox.y1 - bbox.y0) / (n - 1);

  auto grid_x = [&](int i) { return bbox.x0 + i * dx; };
  auto grid_y = [&](int j) { return bbox.y0 + j * dy; };

  std::vector<double> field(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      field[static_cast<std::size_t>(j) * n + i] =
          cubic.value(from_cartesian(pl, {grid_x(i), grid_y(j)}));

  auto value = [&](int i, int j) {
    return field[static_cast<std::size_t>(j) * n + i];
  };
  auto positive = [&](int i, int j) { return value(i, j) >= 0.0; };

  // One interpolated crossing per sign-change edge, shared by both cells.
  std::unordered_map<std::int64_t, PointXY> crossings;
  auto edge_point = [&](int kind, int i, int j) {
    const std::int64_t id = node_id(kind, i, j, n);
    auto it = crossings.find(id);
    if (it != crossings.end()) return id;
    const double v0 = value(i, j);
    const double v1 = kind == 0 ? value(i + 1, j) : value(i, j + 1);
    const double t = v0 / (v0 - v1);
    PointXY pt = kind == 0 ? PointXY{grid_x(i) + t * dx, grid_y(j)}
                           : PointXY{grid_x(i), grid_y(j) + t * dy};
    crossings.emplace(id, pt);
    return id;
  };

  std::vector<Segment> segments;
  for (int j = 0; j + 1 < n; ++j) {
    for (int i = 0; i + 1 < n; ++i) {
      const int config = (positive(i, j) ? 1 : 0) | (positive(i + 1, j) ? 2 : 0) |
                         (positive(i + 1, j + 1) ? 4 : 0) |
                         (positive(i, j + 1) ? 8 : 0);
      if (config == 0 || config == 15) continue;
      // Edge handles, created lazily per sign change.
      auto bottom = [&] { return edge_point(0, i, j); };
      auto top = [&] { return edge_point(0, i, j + 1); };
      auto left = [&] { return edge_point(1, i, j); };
      auto right = [&] { return edge_point(1, i + 1, j); };
      auto emit = [&](std::int64_t a, std::int64_t b) {
        segments.push_back({a, b});
      };
      switch (config) {
        case 1: case 14: emit(left(), bottom()); break;
        case 2: case 13: emit(bottom(), right()); break;
        case 4: case 11: emit(right(), top()); break;
        case 8: case 7: emit(top(), left()); break;
        case 3: case 12: emit(left(), right()); break;
        case 6: case 9: emit(bottom(), top()); break;
        case 5: {
          const double center =
              (value(i, j) + value(i + 1, j) + value(i, j + 1) + value(i + 1, j + 1)) / 4.0;
          if (center >= 0.0) {
            emit(bottom(), right());
            emit(left(), top());
          } else {
            emit(left(), bottom());
            emit(right(), top());
          }
          break;
        }
        case 10: {
          const double center =
              (value(i, j) + value(i + 1, j) + value(i, j + 1) + value(i + 1, j + 1)) / 4.0;
          if (center >= 0.0) {
            emit(left(), bottom());
            emit(right(), top());
          } else {
            emit(bottom(), right());
            emit(left(), top());
          }
          break;
        }
        default: break;
      }
    }
  }

  // Each crossing node touches at most two segments, so the segment graph is
  // a disjoint union of paths and cycles; walk both ways from each unused
  // seed segment, in emission order.
  std::unordered_map<std::int64_t, std::array<int, 2>> incident;
  incident.reserve(crossings.size());
  for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
    for (std::int64_t node : {segments[s].a, segments[s].b}) {
      auto [it, inserted] = incident.try_emplace(node, std::array<int, 2>{-1, -1});
      (*it).second[(*it).second[0] == -1 ? 0 : 1] = s;
    }
  }
  auto other_segment = [&](std::int64_t node, int seg) {
    const auto& pair = incident.at(node);
    if (pair[0] != -1 && pair[0] != seg) return pair[0];
    if (pair[1] != -1 && pair[1] != seg) return pair[1];
    return -1;
  };

  std::vector<bool> used(segments.size(), false);
  TracedCurve curve;
  curve.bbox = bbox;
  curve.resolution = n;

  auto walk = [&](int seed, std::int64_t from,
                  std::vector<std::int64_t>& out) {
    int seg = seed;
    std::int64_t node = from;
    for (;;) {
      const int next = other_segment(node, seg);
      if (next == -1 || used[next]) break;
      used[next] = true;
      node = segments[next].a == node ? segments[next].b : segments[next].a;
      out.push_back(node);
      seg = next;
    }
  };

  for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
    if (used[s]) continue;
    used[s] = true;
    std::vector<std::int64_t> forward{segments[s].a, segments[s].b};
    walk(s, segments[s].b, forward);
    std::vector<std::int64_t> backward;
    walk(s, segments[s].a, backward);
    std::vector<std::int64_t> chain(backward.rbegin(), backward.rend());
    chain.insert(chain.end(), forward.begin(), forward.end());
    const bool closed = chain.size() > 2 && chain.front() == chain.back();
    // Collapse zero-length steps (crossings that land exactly on a shared
    // grid corner), keeping the closing vertex of a loop.
    Polyline line;
    line.reserve(chain.size());
    for (std::int64_t node : chain) {
      const PointXY pt = crossings.at(node);
      if (line.empty() || !(line.back() == pt)) line.push_back(pt);
    }
    if (closed && line.size() >= 3 && !(line.front() == line.back()))
      line.push_back(line.front());
    if (line.size() >= 2) curve.polylines.push_back(std::move(line));
  }
  return curve;
}

}  // namespace orthocubic
