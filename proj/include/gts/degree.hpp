#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "gts/error.hpp"

namespace gts {

/// A membership degree: an exact rational in [0,1], always in lowest terms.
/// Comparisons, min/max and complement (1-x) are exact; there is no floating
/// point anywhere in the library.
class Degree {
public:
  using Rational = boost::multiprecision::cpp_rational;

  Degree() = default;  // zero

  explicit Degree(Rational v) : value_(std::move(v)) { check_range(); }

  Degree(long long num, long long den);

  static Degree zero() { return Degree(); }
  static Degree one() { return Degree(Rational(1)); }

  /// Parses "p/q" or "n" (decimal integers, optional leading '-').
  /// Throws ErrorKind::syntax_error on malformed text and
  /// ErrorKind::degree_out_of_range for values outside [0,1].
  static Degree parse(std::string_view text);

  const Rational& value() const { return value_; }

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  Degree complement() const { return Degree(Rational(1) - value_); }

  /// Canonical rendering: "p/q" in lowest terms, or just "n" when integral.
  std::string str() const;

  friend bool operator==(const Degree& a, const Degree& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Degree& a, const Degree& b) { return a.value_ != b.value_; }
  friend bool operator<(const Degree& a, const Degree& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Degree& a, const Degree& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Degree& a, const Degree& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Degree& a, const Degree& b) { return a.value_ >= b.value_; }

  friend const Degree& min(const Degree& a, const Degree& b) { return b < a ? b : a; }
  friend const Degree& max(const Degree& a, const Degree& b) { return a < b ? b : a; }

private:
  void check_range() const;

  Rational value_{0};
};

}  // namespace gts
