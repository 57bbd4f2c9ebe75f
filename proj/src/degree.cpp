#include "gts/degree.hpp"

#include <cctype>

namespace gts {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Degree::Degree(long long num, long long den) {
  if (den == 0) throw Error(ErrorKind::syntax_error, "degree with zero denominator");
  value_ = Rational(boost::multiprecision::cpp_int(num), boost::multiprecision::cpp_int(den));
  check_range();
}

void Degree::check_range() const {
  if (value_ < 0 || value_ > 1)
    throw Error(ErrorKind::degree_out_of_range,
                "degree " + value_.str() + " outside [0,1]");
}

Degree Degree::parse(std::string_view text) {
  bool negative = false;
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den;
  bool has_den = false;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
    has_den = true;
  }
  if (!all_digits(num) || (has_den && !all_digits(den)))
    throw Error(ErrorKind::syntax_error,
                "malformed rational literal '" + std::string(text) + "'");

  using Int = boost::multiprecision::cpp_int;
  Int n{std::string(num)};
  Int d = has_den ? Int{std::string(den)} : Int{1};
  if (d == 0)
    throw Error(ErrorKind::syntax_error,
                "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Degree(Rational(n, d));
}

std::string Degree::str() const {
  if (denominator(value_) == 1) return numerator(value_).str();
  return value_.str();
}

}  // namespace gts
