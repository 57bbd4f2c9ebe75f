#include "doctest.h"

#include <vector>

#include "gts/degree.hpp"
#include "support.hpp"

using gts::Degree;
using gts::ErrorKind;
using support::capture;
using support::d;

TEST_CASE("parse accepts integers and fractions") {
  CHECK(Degree::parse("0") == Degree::zero());
  CHECK(Degree::parse("1") == Degree::one());
  CHECK(Degree::parse("1/2") == d(1, 2));
  CHECK(Degree::parse("1/3") == d(1, 3));
}

TEST_CASE("parse normalizes to lowest terms") {
  CHECK(Degree::parse("2/4") == d(1, 2));
  CHECK(Degree::parse("2/4").str() == "1/2");
  CHECK(Degree::parse("3/3").str() == "1");
  CHECK(Degree::parse("0/7").str() == "0");
}

TEST_CASE("parse rejects values outside the unit interval") {
  auto high = capture([] { Degree::parse("3/2"); });
  REQUIRE(high);
  CHECK(high->kind() == ErrorKind::degree_out_of_range);

  auto negative = capture([] { Degree::parse("-1/4"); });
  REQUIRE(negative);
  CHECK(negative->kind() == ErrorKind::degree_out_of_range);
}

TEST_CASE("parse rejects malformed literals") {
  for (const char* bad : {"", "abc", "1/", "/2", "1/2/3", "1.5", "+1", "1 2"}) {
    auto e = capture([&] { Degree::parse(bad); });
    REQUIRE_MESSAGE(e, bad);
    CHECK(e->kind() == ErrorKind::syntax_error);
  }
  auto zero_den = capture([] { Degree::parse("1/0"); });
  REQUIRE(zero_den);
  CHECK(zero_den->kind() == ErrorKind::syntax_error);
}

TEST_CASE("numerator/denominator constructor validates like parse") {
  CHECK(Degree(2, 4) == d(1, 2));
  auto high = capture([] { Degree(3, 2); });
  REQUIRE(high);
  CHECK(high->kind() == ErrorKind::degree_out_of_range);
  auto zero_den = capture([] { Degree(1, 0); });
  REQUIRE(zero_den);
  CHECK(zero_den->kind() == ErrorKind::syntax_error);
}

TEST_CASE("ordering and lattice operations are exact") {
  CHECK(d(1, 3) < d(1, 2));
  CHECK(d(1, 2) <= d(1, 2));
  CHECK(d(2, 3) > d(1, 2));
  CHECK(min(d(1, 3), d(1, 2)) == d(1, 3));
  CHECK(max(d(1, 3), d(1, 2)) == d(1, 2));
  CHECK(d(1, 3).complement() == d(2, 3));
  CHECK(Degree::zero().complement() == Degree::one());
}

TEST_CASE("complement is an involution and min/max round-trip through text") {
  const std::vector<Degree> pool = {Degree::zero(), d(1, 4), d(1, 3), d(1, 2),
                                    d(2, 3),        d(3, 4), Degree::one()};
  for (const Degree& a : pool) {
    CHECK(a.complement().complement() == a);
    CHECK(Degree::parse(a.str()) == a);
    for (const Degree& b : pool) {
      CHECK(min(a, b) == min(b, a));
      CHECK(max(a, b) == max(b, a));
      CHECK(min(a, b) <= max(a, b));
      CHECK(Degree::parse(min(a, b).str()) == min(a, b));
    }
  }
}

TEST_CASE("big numerators survive exactly") {
  Degree v = Degree::parse("123456789123456789/987654321987654321");
  CHECK(v.str() == "13717421/109739369");
  CHECK(Degree::parse(v.str()) == v);
}
