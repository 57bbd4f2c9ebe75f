#include "gts/error.hpp"

namespace gts {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::duplicate_label: return "DuplicateLabel";
    case ErrorKind::degree_out_of_range: return "DegreeOutOfRange";
    case ErrorKind::index_out_of_range: return "IndexOutOfRange";
    case ErrorKind::point_set_mismatch: return "PointSetMismatch";
    case ErrorKind::empty_family: return "EmptyFamily";
    case ErrorKind::point_label_not_found: return "PointLabelNotFound";
    case ErrorKind::not_a_bijection: return "NotABijection";
    case ErrorKind::adjointness_violation: return "AdjointnessViolation";
    case ErrorKind::search_space_too_large: return "SearchSpaceTooLarge";
    case ErrorKind::incompatible_witness: return "IncompatibleWitness";
    case ErrorKind::link_mismatch: return "LinkMismatch";
    case ErrorKind::not_a_permutation: return "NotAPermutation";
    case ErrorKind::syntax_error: return "SyntaxError";
    case ErrorKind::unknown_point_label: return "UnknownPointLabel";
    case ErrorKind::invalid_label: return "InvalidLabel";
  }
  return "UnknownError";
}

Error Error::syntax(std::size_t line, std::size_t col, const std::string& message) {
  Error e(ErrorKind::syntax_error,
          "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + message);
  e.line = line;
  e.col = col;
  return e;
}

Error Error::adjointness(std::size_t point, std::size_t open, const std::string& message) {
  Error e(ErrorKind::adjointness_violation, message);
  e.point = point;
  e.open = open;
  return e;
}

}  // namespace gts
