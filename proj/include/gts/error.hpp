#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gts {

enum class ErrorKind {
  dimension_mismatch,
  duplicate_label,
  degree_out_of_range,
  index_out_of_range,
  point_set_mismatch,
  empty_family,
  point_label_not_found,
  not_a_bijection,
  adjointness_violation,
  search_space_too_large,
  incompatible_witness,
  link_mismatch,
  not_a_permutation,
  syntax_error,
  unknown_point_label,
  invalid_label,
};

const char* to_string(ErrorKind kind);

/// Library-wide exception. `line`/`col` are 1-based and set for parse errors;
/// `point`/`open` carry the first failing pair of an adjointness violation.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  static Error syntax(std::size_t line, std::size_t col, const std::string& message);
  static Error adjointness(std::size_t point, std::size_t open, const std::string& message);

  std::size_t line = 0;
  std::size_t col = 0;
  std::size_t point = npos;
  std::size_t open = npos;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  ErrorKind kind_;
};

}  // namespace gts
