// Command-line surface for the pedal-perspectivity locus library:
//   report   exact per-point report (locus membership, Ceva product, ...)
//   verify   chord-sampled identity sweeps with an exact/oracle cross-check
//   trace    marching-squares contour of the locus cubic to SVG/CSV
//   centers  catalog of named centers with exact locus values

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orthocubic/bary.hpp"
#include "orthocubic/cartesian.hpp"
#include "orthocubic/centers.hpp"
#include "orthocubic/errors.hpp"
#include "orthocubic/homology.hpp"
#include "orthocubic/io.hpp"
#include "orthocubic/locus.hpp"
#include "orthocubic/locus_points.hpp"
#include "orthocubic/oracle.hpp"
#include "orthocubic/pedal.hpp"
#include "orthocubic/trace.hpp"
#include "orthocubic/triangle.hpp"

namespace {

using nlohmann::ordered_json;
using namespace orthocubic;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadTriangle = 2;
constexpr int kExitBadPoint = 3;
constexpr int kExitIo = 4;

struct TriangleInput {
  explicit TriangleInput(TriangleShape s) : shape(std::move(s)) {}

  TriangleShape shape;
  bool exact = true;
  std::string note;  // set in float mode
  // User frame when the triangle came from --vertices (cartesian points are
  // interpreted there); otherwise the standard placement.
  CartesianPlacement frame;
};

TriangleInput triangle_from_sides(const std::vector<std::string>& sides) {
  const Rational a = rational_from_string(sides[0]);
  const Rational b = rational_from_string(sides[1]);
  const Rational c = rational_from_string(sides[2]);
  TriangleInput in{TriangleShape::from_sides(a, b, c)};
  in.frame = CartesianPlacement::standard(in.shape);
  return in;
}

TriangleInput triangle_from_vertices(const std::vector<std::string>& coords) {
  std::vector<Rational> v;
  v.reserve(6);
  for (const std::string& s : coords) v.push_back(rational_from_string(s));
  // explicit return type: the deduced one would be a boost expression
  // template referencing the dead locals
  auto dist2 = [&](int p, int q) -> Rational {
    const Rational dx = v[2 * p] - v[2 * q];
    const Rational dy = v[2 * p + 1] - v[2 * q + 1];
    return dx * dx + dy * dy;
  };
  const Rational a2 = dist2(1, 2), b2 = dist2(2, 0), c2 = dist2(0, 1);
  const auto a = exact_sqrt(a2), b = exact_sqrt(b2), c = exact_sqrt(c2);
  const bool exact = a && b && c;
  TriangleInput in{exact ? TriangleShape::from_sides(*a, *b, *c)
                         : TriangleShape::from_sides(
                               rational_from_double(std::sqrt(to_double(a2))),
                               rational_from_double(std::sqrt(to_double(b2))),
                               rational_from_double(std::sqrt(to_double(c2))))};
  in.exact = exact;
  if (!exact)
    in.note =
        "side lengths are not rational; running on their floating-point "
        "approximations";
  in.frame = CartesianPlacement{{to_double(v[0]), to_double(v[1])},
                                {to_double(v[2]), to_double(v[3])},
                                {to_double(v[4]), to_double(v[5])}};
  return in;
}

struct PointInput {
  BaryPoint point;
  bool converted_from_cartesian = false;
};

PointInput point_from_bary(const std::vector<std::string>& coords) {
  BaryPoint p{rational_from_string(coords[0]), rational_from_string(coords[1]),
              rational_from_string(coords[2])};
  if (is_zero_triple(p))
    fail(ErrorCode::bad_input, "barycentric coordinates must not all vanish");
  return {p, false};
}

PointInput point_from_cartesian(const TriangleInput& tri,
                                const std::vector<std::string>& coords) {
  const PointXY pt{to_double(rational_from_string(coords[0])),
                   to_double(rational_from_string(coords[1]))};
  const BaryPointF bf = from_cartesian(tri.frame, pt);
  return {{rational_from_double(bf.alpha), rational_from_double(bf.beta),
           rational_from_double(bf.gamma)},
          true};
}

std::string triangle_mode(const TriangleInput& tri) {
  return tri.exact ? "exact" : "float";
}

// ---------------------------------------------------------------- report --

struct ReportField {
  std::optional<std::string> value;
  std::string reason;
};

struct PointReport {
  PointReport(TriangleInput t, PointInput p)
      : tri(std::move(t)), input(std::move(p)) {}

  TriangleInput tri;
  PointInput input;
  std::string representative;
  ReportField normalized_a, normalized_b, normalized_g;
  std::string locus_value;
  bool on_locus = false;
  double locus_value_paper = 0.0;
  ReportField ceva;
  ReportField persp;
  ReportField iso;
  std::optional<OrientedDistances> distances;
  std::string distances_reason;
  std::optional<double> residual;
  std::string residual_reason;
};

PointReport build_report(const TriangleInput& tri, const PointInput& input) {
  PointReport r{tri, input};
  const TriangleShape& t = tri.shape;
  const BaryPoint rep = canonical(input.point);
  const LocusCubic cubic(t);

  r.representative = canonical_string(rep);
  const Rational value = cubic.value(rep);
  r.locus_value = to_string(value);
  r.on_locus = value == 0;
  r.locus_value_paper = cubic.value_paper(rep);

  try {
    const BaryPoint norm = normalize(rep);
    r.normalized_a.value = to_string(norm.alpha);
    r.normalized_b.value = to_string(norm.beta);
    r.normalized_g.value = to_string(norm.gamma);
  } catch (const Error& e) {
    r.normalized_a.reason = error_code_name(e.code());
  }
  try {
    r.ceva.value = to_string(ceva_product(t, rep));
  } catch (const Error& e) {
    r.ceva.reason = error_code_name(e.code());
  }
  try {
    r.persp.value = canonical_string(perspector(t, rep));
  } catch (const Error& e) {
    r.persp.reason = error_code_name(e.code());
  }
  try {
    r.iso.value = canonical_string(isogonal(t, rep));
  } catch (const Error& e) {
    r.iso.reason = error_code_name(e.code());
  }
  try {
    r.distances = oriented_distances(t, rep);
  } catch (const Error& e) {
    r.distances_reason = error_code_name(e.code());
  }
  try {
    r.residual = cart_concurrency_residual(t, CartesianPlacement::standard(t), rep);
  } catch (const Error& e) {
    r.residual_reason = error_code_name(e.code());
  }
  return r;
}

ordered_json field_json(const ReportField& f) {
  if (f.value) return *f.value;
  return nullptr;
}

void report_json(const PointReport& r, std::ostream& out) {
  ordered_json j;
  j["triangle"]["mode"] = triangle_mode(r.tri);
  j["triangle"]["a"] = to_string(r.tri.shape.a());
  j["triangle"]["b"] = to_string(r.tri.shape.b());
  j["triangle"]["c"] = to_string(r.tri.shape.c());
  if (!r.tri.note.empty()) j["triangle"]["note"] = r.tri.note;
  j["point"]["representative"] = r.representative;
  if (r.input.converted_from_cartesian)
    j["point"]["conversion"] = "floating-point";
  if (r.normalized_a.value) {
    j["point"]["normalized"] = {*r.normalized_a.value, *r.normalized_b.value,
                                *r.normalized_g.value};
  } else {
    j["point"]["normalized"] = nullptr;
    j["point"]["normalized_reason"] = r.normalized_a.reason;
  }
  j["locus_value"] = r.locus_value;
  j["on_locus"] = r.on_locus;
  j["locus_value_paper"] = r.locus_value_paper;
  j["ceva_product"] = field_json(r.ceva);
  if (!r.ceva.value) j["ceva_product_reason"] = r.ceva.reason;
  j["perspector"] = field_json(r.persp);
  if (!r.persp.value) j["perspector_reason"] = r.persp.reason;
  j["isogonal"] = field_json(r.iso);
  if (!r.iso.value) j["isogonal_reason"] = r.iso.reason;
  if (r.distances) {
    j["oriented_distances"] = {r.distances->d_a, r.distances->d_b,
                               r.distances->d_c};
  } else {
    j["oriented_distances"] = nullptr;
    j["oriented_distances_reason"] = r.distances_reason;
  }
  if (r.residual) {
    j["oracle_residual"] = *r.residual;
  } else {
    j["oracle_residual"] = nullptr;
    j["oracle_residual_reason"] = r.residual_reason;
  }
  out << j.dump(2) << "\n";
}

void print_field(std::ostream& out, const char* name, const ReportField& f) {
  out << name << ": ";
  if (f.value)
    out << *f.value;
  else
    out << "null (" << f.reason << ")";
  out << "\n";
}

void report_text(const PointReport& r, std::ostream& out) {
  out << "triangle: a=" << to_string(r.tri.shape.a())
      << " b=" << to_string(r.tri.shape.b())
      << " c=" << to_string(r.tri.shape.c()) << " (" << triangle_mode(r.tri)
      << ")\n";
  if (!r.tri.note.empty()) out << "note: " << r.tri.note << "\n";
  out << "point: " << r.representative;
  if (r.input.converted_from_cartesian) out << " (from cartesian, floating-point)";
  out << "\n";
  if (r.normalized_a.value) {
    out << "normalized: " << *r.normalized_a.value << " "
        << *r.normalized_b.value << " " << *r.normalized_g.value << "\n";
  } else {
    out << "normalized: null (" << r.normalized_a.reason << ")\n";
  }
  out << "locus_value: " << r.locus_value << "\n";
  out << "on_locus: " << (r.on_locus ? "true" : "false") << "\n";
  out << "locus_value_paper: " << format_double(r.locus_value_paper) << "\n";
  print_field(out, "ceva_product", r.ceva);
  print_field(out, "perspector", r.persp);
  print_field(out, "isogonal", r.iso);
  if (r.distances) {
    out << "oriented_distances: " << format_double(r.distances->d_a) << " "
        << format_double(r.distances->d_b) << " "
        << format_double(r.distances->d_c) << "\n";
  } else {
    out << "oriented_distances: null (" << r.distances_reason << ")\n";
  }
  if (r.residual) {
    out << "oracle_residual: " << format_double(*r.residual) << "\n";
  } else {
    out << "oracle_residual: null (" << r.residual_reason << ")\n";
  }
}

// ---------------------------------------------------------------- verify --

struct CheckLine {
  explicit CheckLine(std::string text) : label(std::move(text)) {}

  std::string label;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::size_t skipped = 0;
  std::string first_counterexample;

  bool ok() const { return passed == total; }

  void tally(bool pass, const std::string& witness) {
    ++total;
    if (pass) {
      ++passed;
    } else if (first_counterexample.empty()) {
      first_counterexample = witness;
    }
  }
};

int run_verify(const TriangleInput& tri, std::size_t samples, std::uint64_t seed,
               std::ostream& out) {
  const TriangleShape& t = tri.shape;
  const LocusCubic cubic(t);
  const CartesianPlacement placement = CartesianPlacement::standard(t);
  const double tol = 1e-9;

  out << "verify: triangle a=" << to_string(t.a()) << " b=" << to_string(t.b())
      << " c=" << to_string(t.c()) << " samples=" << samples
      << " seed=" << seed << "\n";

  const std::vector<BaryPoint> members = chord_locus_points(cubic, samples);
  out << "locus members via chord construction: " << members.size();
  // On a right triangle the named centers generate a chord-closed finite set,
  // so fewer points than requested is a property of the curve, not a failure.
  if (members.size() < samples) out << " (construction closed below the request)";
  out << "\n";

  std::vector<CheckLine> checks;
  CheckLine member_value{"  locus_value == 0 exactly"};
  CheckLine member_ceva{"  ceva_product == -1 exactly"};
  CheckLine member_iso{"  isogonal closure: locus_value(isogonal) == 0"};
  CheckLine member_oracle{"  oracle concurrency residual <= 1e-9"};
  for (const BaryPoint& p : members) {
    const std::string witness = "P = " + canonical_string(p);
    member_value.tally(cubic.value(p) == 0, witness);
    member_ceva.tally(ceva_product(t, p) == -1, witness);
    if (p.alpha != 0 && p.beta != 0 && p.gamma != 0) {
      member_iso.tally(cubic.value(isogonal(t, p)) == 0, witness);
    } else {
      ++member_iso.skipped;
    }
    member_oracle.tally(oracle_is_perspective(t, placement, p, tol), witness);
  }

  SeededRng rng(seed);
  const double k_scale =
      std::max({std::abs(to_double(cubic.coefficients().k_a)),
                std::abs(to_double(cubic.coefficients().k_b)),
                std::abs(to_double(cubic.coefficients().k_c))});
  CheckLine non_value{"  locus_value != 0 exactly"};
  CheckLine non_ceva{"  ceva_product != -1 exactly"};
  CheckLine non_agree{"  exact and Ceva membership predicates agree"};
  CheckLine non_oracle{"  oracle concurrency residual > 1e-9"};
  std::vector<BaryPoint> nonmembers;
  nonmembers.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i)
    nonmembers.push_back(random_nonmember(rng, cubic));
  for (const BaryPoint& p : nonmembers) {
    const std::string witness = "P = " + canonical_string(p);
    const bool member_exact = cubic.value(p) == 0;
    const bool member_ceva_pred = ceva_product(t, p) == -1;
    non_value.tally(!member_exact, witness);
    non_ceva.tally(!member_ceva_pred, witness);
    non_agree.tally(member_exact == member_ceva_pred, witness);
    // Mirror the two-sided oracle contract: points inside the float gap
    // around the curve are skipped, not judged.
    const double scaled = std::abs(cubic.value(to_float(normalize(p)))) / k_scale;
    if (scaled > 1e-6) {
      non_oracle.tally(!oracle_is_perspective(t, placement, p, tol), witness);
    } else {
      ++non_oracle.skipped;
    }
  }

  checks = {member_value, member_ceva, member_iso, member_oracle,
            non_value,   non_ceva,    non_agree,  non_oracle};

  if (t.is_equilateral()) {
    CheckLine factor{"  equilateral factorization k*(b-a)(a-g)(g-b)"};
    const BaryPoint generic{Rational(1), Rational(2), Rational(4)};
    const Rational k = cubic.value(generic) / equilateral_locus_value(generic);
    auto check_set = [&](const std::vector<BaryPoint>& set) {
      for (const BaryPoint& p : set) {
        factor.tally(cubic.value(p) == k * equilateral_locus_value(p),
                     "P = " + canonical_string(p));
      }
    };
    check_set(members);
    check_set(nonmembers);
    checks.push_back(factor);
  }

  bool all_ok = true;
  std::string counterexample;
  std::size_t position = 0;
  for (const CheckLine& check : checks) {
    std::ostringstream line;
    line << check.label << ": " << check.passed << "/" << check.total;
    if (check.skipped > 0) line << " (" << check.skipped << " skipped)";
    if (position == 4) out << "random non-members: " << nonmembers.size() << "\n";
    out << line.str() << "\n";
    if (!check.ok()) {
      all_ok = false;
      if (counterexample.empty())
        counterexample = check.label + " ; " + check.first_counterexample;
    }
    ++position;
  }
  if (!all_ok) {
    out << "first counterexample:" << counterexample << "\n";
    out << "RESULT: FAIL\n";
    return kExitVerifyFail;
  }
  out << "RESULT: PASS\n";
  return kExitOk;
}

// ----------------------------------------------------------------- trace --

int run_trace(const TriangleInput& tri, const std::vector<double>& bbox_vals,
              int res, const std::string& svg_path, const std::string& csv_path,
              std::ostream& out) {
  if (res < 2 || res > 8192) {
    std::cerr << "error: resolution out of range (2..8192)\n";
    return kExitBadTriangle;
  }
  if (svg_path.empty() && csv_path.empty()) {
    std::cerr << "error: at least one of --svg/--csv is required\n";
    return kExitBadTriangle;
  }
  const LocusCubic cubic(tri.shape);
  const CartesianPlacement placement = CartesianPlacement::standard(tri.shape);
  Bbox box = default_trace_bbox(placement);
  if (!bbox_vals.empty())
    box = Bbox{bbox_vals[0], bbox_vals[1], bbox_vals[2], bbox_vals[3]};
  if (!box.valid()) {
    std::cerr << "error: degenerate bounding box\n";
    return kExitBadTriangle;
  }

  const TracedCurve curve = trace(cubic, box, res);
  std::size_t vertices = 0;
  for (const Polyline& line : curve.polylines) vertices += line.size();
  out << "trace: res=" << res << " bbox=[" << format_double(box.x0) << ", "
      << format_double(box.y0) << ", " << format_double(box.x1) << ", "
      << format_double(box.y1) << "] polylines=" << curve.polylines.size()
      << " vertices=" << vertices << "\n";

  auto write_file = [&](const std::string& path, auto writer) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open '" << path << "' for writing\n";
      return false;
    }
    writer(file);
    file.flush();
    if (!file) {
      std::cerr << "error: write failed on '" << path << "'\n";
      return false;
    }
    return true;
  };
  if (!svg_path.empty()) {
    if (!write_file(svg_path,
                    [&](std::ostream& f) { write_svg(curve, cubic, f); }))
      return kExitIo;
    out << "svg: " << svg_path << "\n";
  }
  if (!csv_path.empty()) {
    if (!write_file(csv_path, [&](std::ostream& f) { write_csv(curve, f); }))
      return kExitIo;
    out << "csv: " << csv_path << "\n";
  }
  return kExitOk;
}

// --------------------------------------------------------------- centers --

int run_centers(const TriangleInput& tri, bool as_json, std::ostream& out) {
  const TriangleShape& t = tri.shape;
  const LocusCubic cubic(t);
  if (as_json) {
    ordered_json j;
    j["triangle"]["mode"] = triangle_mode(tri);
    j["triangle"]["a"] = to_string(t.a());
    j["triangle"]["b"] = to_string(t.b());
    j["triangle"]["c"] = to_string(t.c());
    j["centers"] = ordered_json::array();
    for (CenterName name : center_catalog()) {
      const BaryPoint p = known_center(t, name);
      ordered_json row;
      row["key"] = center_key(name);
      row["description"] = center_description(name);
      row["coordinates"] = canonical_string(p);
      row["locus_value"] = to_string(cubic.value(canonical(p)));
      row["on_locus"] = cubic.value(p) == 0;
      j["centers"].push_back(row);
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "centers: triangle a=" << to_string(t.a()) << " b=" << to_string(t.b())
      << " c=" << to_string(t.c()) << "\n";
  out << std::left << std::setw(4) << "key" << std::setw(36) << "description"
      << std::setw(28) << "coordinates" << "locus_value\n";
  for (CenterName name : center_catalog()) {
    const BaryPoint p = known_center(t, name);
    out << std::left << std::setw(4) << center_key(name) << std::setw(36)
        << center_description(name) << std::setw(28) << canonical_string(p)
        << to_string(cubic.value(canonical(p))) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pedal-triangle perspectivity locus toolkit"};
  app.require_subcommand(1);

  std::vector<std::string> sides, vertices, bary, cart;
  std::vector<double> bbox_vals;
  bool json_out = false, text_out = false, auto_box = true;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  int res = 256;
  std::string svg_path, csv_path;

  CLI::App* report = app.add_subcommand("report", "exact report for one point");
  report->add_option("--sides", sides, "triangle side lengths a b c")->expected(3);
  report->add_option("--vertices", vertices, "vertex coordinates x1 y1 x2 y2 x3 y3")
      ->expected(6);
  report->add_option("--bary", bary, "barycentric coordinates")->expected(3);
  report->add_option("--cart", cart, "cartesian coordinates")->expected(2);
  report->add_flag("--json", json_out, "JSON output");
  report->add_flag("--text", text_out, "plain text output (default)");

  CLI::App* verify = app.add_subcommand("verify", "identity sweeps over sampled points");
  verify->add_option("--sides", sides, "triangle side lengths a b c")->expected(3);
  verify->add_option("--samples", samples, "points per population")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  verify->add_option("--seed", seed, "random seed");

  CLI::App* trace_cmd = app.add_subcommand("trace", "contour the locus cubic");
  trace_cmd->add_option("--sides", sides, "triangle side lengths a b c")->expected(3);
  trace_cmd->add_option("--bbox", bbox_vals, "window x0 y0 x1 y1")->expected(4);
  trace_cmd->add_flag("--auto", auto_box, "default window (triangle box x1.5)");
  trace_cmd->add_option("--res", res, "grid points per axis");
  trace_cmd->add_option("--svg", svg_path, "SVG output path");
  trace_cmd->add_option("--csv", csv_path, "CSV output path");

  CLI::App* centers = app.add_subcommand("centers", "catalog centers and locus values");
  centers->add_option("--sides", sides, "triangle side lengths a b c")->expected(3);
  centers->add_flag("--json", json_out, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadTriangle;
  }

  std::optional<TriangleInput> tri_in;
  try {
    if (!sides.empty()) {
      tri_in = triangle_from_sides(sides);
    } else if (!vertices.empty()) {
      tri_in = triangle_from_vertices(vertices);
    } else {
      std::cerr << "error: a triangle is required (--sides or --vertices)\n";
      return kExitBadTriangle;
    }
  } catch (const Error& e) {
    std::cerr << "error: invalid triangle: " << e.what() << "\n";
    return kExitBadTriangle;
  }
  const TriangleInput& tri = *tri_in;

  try {
    if (report->parsed()) {
      PointInput point;
      try {
        if (!bary.empty()) {
          point = point_from_bary(bary);
        } else if (!cart.empty()) {
          point = point_from_cartesian(tri, cart);
        } else {
          std::cerr << "error: a point is required (--bary or --cart)\n";
          return kExitBadPoint;
        }
      } catch (const Error& e) {
        std::cerr << "error: invalid point: " << e.what() << "\n";
        return kExitBadPoint;
      }
      const PointReport rep = build_report(tri, point);
      if (json_out)
        report_json(rep, std::cout);
      else
        report_text(rep, std::cout);
      return kExitOk;
    }
    if (verify->parsed()) return run_verify(tri, samples, seed, std::cout);
    if (trace_cmd->parsed())
      return run_trace(tri, bbox_vals, res, svg_path, csv_path, std::cout);
    if (centers->parsed()) return run_centers(tri, json_out, std::cout);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadTriangle;
  }
  return kExitBadTriangle;
}
