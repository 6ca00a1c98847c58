#pragma once

#include <stdexcept>
#include <string>

namespace orthocubic {

enum class ErrorCode {
  invalid_triangle,
  point_at_infinity,
  coincident_points,
  coincident_lines,
  degenerate_determinant,
  foot_at_vertex,
  not_perspective,
  degenerate_cevian,
  undefined_at_vertex,
  chord_degenerate,
  unknown_center,
  degenerate_segment,
  bad_input,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_triangle: return "invalid_triangle";
    case ErrorCode::point_at_infinity: return "point_at_infinity";
    case ErrorCode::coincident_points: return "coincident_points";
    case ErrorCode::coincident_lines: return "coincident_lines";
    case ErrorCode::degenerate_determinant: return "degenerate_determinant";
    case ErrorCode::foot_at_vertex: return "foot_at_vertex";
    case ErrorCode::not_perspective: return "not_perspective";
    case ErrorCode::degenerate_cevian: return "degenerate_cevian";
    case ErrorCode::undefined_at_vertex: return "undefined_at_vertex";
    case ErrorCode::chord_degenerate: return "chord_degenerate";
    case ErrorCode::unknown_center: return "unknown_center";
    case ErrorCode::degenerate_segment: return "degenerate_segment";
    case ErrorCode::bad_input: return "bad_input";
  }
  return "unknown";
}

// Single exception type for all geometric failure modes; the code
// distinguishes them programmatically, the message carries specifics.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace orthocubic
