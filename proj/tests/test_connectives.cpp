#include "doctest.h"

#include <random>
#include <vector>

#include "fixtures.hpp"
#include "gts/connectives.hpp"
#include "gts/duality.hpp"
#include "gts/morphisms.hpp"
#include "gts/properties.hpp"
#include "oracles.hpp"
#include "support.hpp"

using gts::Degree;
using gts::ErrorKind;
using gts::Space;
using support::capture;
using support::d;

namespace {

// function graphs a.points -> range, lexicographic, recomputed independently
std::vector<std::vector<std::size_t>> graphs_lex(std::size_t domain, std::size_t range) {
  std::vector<std::vector<std::size_t>> out;
  if (range == 0 && domain > 0) return out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < domain; ++i) total *= range;
  for (std::size_t c = 0; c < total; ++c) {
    std::vector<std::size_t> g(domain);
    std::size_t v = c;
    for (std::size_t i = domain; i-- > 0;) {
      g[i] = v % range;
      v /= range;
    }
    out.push_back(std::move(g));
  }
  if (domain == 0) out.assign(1, {});
  return out;
}

}  // namespace

TEST_CASE("canonical labels") {
  CHECK(gts::function_label({}) == "f[]");
  CHECK(gts::function_label({1, 0}) == "f[0\xE2\x86\x92" "1,1\xE2\x86\x92" "0]");
  CHECK(gts::pair_label("a", "{b}") == "(a,{b})");
  CHECK(gts::inl_label("x") == "inl(x)");
  CHECK(gts::inr_label("B") == "inr(B)");
}

TEST_CASE("limp entries follow the defining formula") {
  for (const Space& a : {fixtures::sierpinski(), fixtures::fuzzy2()})
    for (const Space& b : {fixtures::sierpinski(), fixtures::discrete2(), fixtures::fuzzy2()}) {
      Space l = gts::limp(a, b);
      auto graphs = graphs_lex(a.point_count(), b.point_count());
      REQUIRE(l.point_count() == graphs.size());
      REQUIRE(l.open_count() == a.point_count() * b.open_count());
      for (std::size_t r = 0; r < graphs.size(); ++r) {
        CHECK(l.point_label(r) == gts::function_label(graphs[r]));
        for (std::size_t x = 0; x < a.point_count(); ++x)
          for (std::size_t j = 0; j < b.open_count(); ++j) {
            std::size_t col = x * b.open_count() + j;
            CHECK(l.open_label(col) == gts::pair_label(a.point_label(x), b.open_label(j)));
            CHECK(l.at(r, col) == b.at(graphs[r][x], j));
          }
      }
    }
}

TEST_CASE("limp from a one-point space is isomorphic to the operand") {
  Space one({"x"}, {"A"}, {{Degree::one()}});
  for (const Space& b : fixtures::corpus()) {
    Space l = gts::limp(one, b);
    CHECK(l.point_count() == b.point_count());
    CHECK(gts::find_isomorphism(l, b));
  }
}

TEST_CASE("limp honors its cap") {
  auto e = capture([&] { gts::limp(fixtures::sierpinski(), fixtures::discrete2(), 3); });
  REQUIRE(e);
  CHECK(e->kind() == ErrorKind::search_space_too_large);
}

TEST_CASE("restricting the carrier to adjoint-admitting functions matches enumeration") {
  Space a = fixtures::sierpinski();
  for (const Space& b : fixtures::corpus()) {
    Space restricted =
        gts::limp(a, b, gts::default_cap(), gts::FunctionCarrier::adjoint_only);
    std::vector<std::string> expected;
    for (const auto& m : gts::enumerate_continuous(a, b)) {
      std::string label = gts::function_label(m.f);
      if (expected.empty() || expected.back() != label) expected.push_back(label);
    }
    CHECK(restricted.point_labels() == expected);
  }
}

TEST_CASE("tensor entries follow the defining formula") {
  Space a = fixtures::sierpinski();
  Space b = fixtures::fuzzy2();
  Space t = gts::tensor(a, b);
  auto graphs = graphs_lex(a.point_count(), b.open_count());
  REQUIRE(t.point_count() == a.point_count() * b.point_count());
  REQUIRE(t.open_count() == graphs.size());
  for (std::size_t x = 0; x < a.point_count(); ++x)
    for (std::size_t y = 0; y < b.point_count(); ++y) {
      std::size_t row = x * b.point_count() + y;
      CHECK(t.point_label(row) == gts::pair_label(a.point_label(x), b.point_label(y)));
      for (std::size_t r = 0; r < graphs.size(); ++r)
        CHECK(t.at(row, r) == b.at(y, graphs[r][x]));
    }
}

TEST_CASE("tensor equals the dual of limp into the dual") {
  for (const Space& a : {fixtures::sierpinski(), fixtures::indiscrete2()})
    for (const Space& b : {fixtures::sierpinski(), fixtures::fuzzy2()}) {
      Space direct = gts::tensor(a, b);
      Space via = gts::dual(gts::limp(a, gts::dual(b)));
      CHECK(direct.same_presentation(via));
    }
}

TEST_CASE("tensor_sum equals limp from the dual") {
  for (const Space& a : {fixtures::sierpinski(), fixtures::discrete2()})
    for (const Space& b : {fixtures::sierpinski(), fixtures::fuzzy2()}) {
      Space direct = gts::tensor_sum(a, b);
      Space via = gts::limp(gts::dual(a), b);
      CHECK(direct.same_presentation(via));
      CHECK(direct.point_count() == via.point_count());
      for (std::size_t i = 0; i < direct.open_count(); ++i)
        CHECK(direct.open_label(i) ==
              gts::pair_label(a.open_label(i / b.open_count()),
                              b.open_label(i % b.open_count())));
    }
}

TEST_CASE("tensor_sum from the open-free unit has one point and no opens") {
  Space t = gts::tensor_sum(gts::unit_top(), fixtures::sierpinski());
  CHECK(t.point_count() == 1);
  CHECK(t.open_count() == 0);
  CHECK(t.point_label(0) == "f[]");
}

TEST_CASE("sum is the tagged disjoint union of points with paired opens") {
  Space p({"x"}, {"A"}, {{d(1, 3)}});
  Space q({"y"}, {"B"}, {{d(1, 2)}});
  Space s = gts::sum(p, q);
  REQUIRE(s.point_count() == 2);
  REQUIRE(s.open_count() == 1);
  CHECK(s.point_label(0) == "inl(x)");
  CHECK(s.point_label(1) == "inr(y)");
  CHECK(s.open_label(0) == "(A,B)");
  CHECK(s.at(0, 0) == d(1, 3));
  CHECK(s.at(1, 0) == d(1, 2));

  for (const Space& a : fixtures::corpus())
    for (const Space& b : fixtures::corpus()) {
      Space t = gts::sum(a, b);
      CHECK(t.point_count() == a.point_count() + b.point_count());
      CHECK(t.open_count() == a.open_count() * b.open_count());
      for (std::size_t i = 0; i < a.open_count(); ++i)
        for (std::size_t j = 0; j < b.open_count(); ++j) {
          std::size_t col = i * b.open_count() + j;
          for (std::size_t x = 0; x < a.point_count(); ++x)
            CHECK(t.at(x, col) == a.at(x, i));
          for (std::size_t y = 0; y < b.point_count(); ++y)
            CHECK(t.at(a.point_count() + y, col) == b.at(y, j));
        }
    }
}

TEST_CASE("product pairs points and tags opens") {
  for (const Space& a : fixtures::corpus())
    for (const Space& b : fixtures::corpus()) {
      Space t = gts::product(a, b);
      CHECK(t.point_count() == a.point_count() * b.point_count());
      CHECK(t.open_count() == a.open_count() + b.open_count());
      for (std::size_t x = 0; x < a.point_count(); ++x)
        for (std::size_t y = 0; y < b.point_count(); ++y) {
          std::size_t row = x * b.point_count() + y;
          for (std::size_t i = 0; i < a.open_count(); ++i) CHECK(t.at(row, i) == a.at(x, i));
          for (std::size_t j = 0; j < b.open_count(); ++j)
            CHECK(t.at(row, a.open_count() + j) == b.at(y, j));
        }
    }
}

TEST_CASE("product is the de-morgan dual of sum") {
  for (const Space& a : {fixtures::sierpinski(), fixtures::fuzzy2()})
    for (const Space& b : {fixtures::discrete2(), fixtures::indiscrete2()})
      CHECK(gts::product(a, b)
                .same_presentation(gts::dual(gts::sum(gts::dual(a), gts::dual(b)))));
}

TEST_CASE("units are dual to each other") {
  Space zero = gts::unit_zero();
  Space top = gts::unit_top();
  CHECK(zero.point_count() == 0);
  CHECK(zero.open_count() == 1);
  CHECK(top.point_count() == 1);
  CHECK(top.open_count() == 0);
  CHECK(gts::dual(zero).same_presentation(top));
  CHECK(gts::dual(top).same_presentation(zero));
}

TEST_CASE("unit laws hold by isomorphism") {
  for (const Space& s : fixtures::corpus()) {
    CHECK(gts::find_isomorphism(gts::sum(s, gts::unit_zero()), s));
    CHECK(gts::find_isomorphism(gts::sum(gts::unit_zero(), s), s));
    CHECK(gts::find_isomorphism(gts::product(s, gts::unit_top()), s));
    CHECK(gts::find_isomorphism(gts::product(gts::unit_top(), s), s));
  }
  CHECK(gts::find_isomorphism(gts::sum(gts::unit_zero(), gts::unit_zero()), gts::unit_zero()));
}

TEST_CASE("verify_identities passes on fixture pairs") {
  gts::LawReport report = gts::verify_identities(fixtures::sierpinski(), fixtures::discrete2());
  CHECK(report.all_hold);
  CHECK(!report.any_skipped);
  REQUIRE(report.laws.size() == 7);
  std::vector<std::string> names;
  for (const auto& law : report.laws) {
    names.push_back(law.law);
    CHECK(law.holds);
    CHECK(!law.skipped);
  }
  CHECK(names == std::vector<std::string>{"top-equals-dual-of-zero", "sum-unit", "product-unit",
                                          "sum-de-morgan", "tensor-as-dual-limp",
                                          "tensor-sum-as-limp", "closed-limp"});
}

TEST_CASE("verify_identities passes on the degenerate unit pair") {
  gts::LawReport report = gts::verify_identities(gts::unit_zero(), gts::unit_top());
  CHECK(report.all_hold);
  CHECK(!report.any_skipped);
}

TEST_CASE("verify_identities skips function-space laws over the cap without failing") {
  gts::LawReport report = gts::verify_identities(fixtures::discrete2(), fixtures::discrete2(), 3);
  CHECK(report.all_hold);
  CHECK(report.any_skipped);
  for (const auto& law : report.laws) {
    if (law.law == "tensor-as-dual-limp" || law.law == "tensor-sum-as-limp" ||
        law.law == "closed-limp")
      CHECK(law.skipped);
    else
      CHECK(!law.skipped);
  }
}

TEST_CASE("complementing a function space commutes with complementing its operands") {
  // closed structure carried across by (x, B) -> (x, phi(B)) on the open pairs
  for (const Space& a : {fixtures::sierpinski(), fixtures::indiscrete2()})
    for (const Space& b : {fixtures::sierpinski(), fixtures::fuzzy2()}) {
      Space l = gts::limp(a, b);
      gts::ClosedLink link_b = gts::closed_of(b);
      std::vector<std::size_t> phi_star(l.open_count());
      std::vector<std::string> labels(l.open_count());
      for (std::size_t x = 0; x < a.point_count(); ++x)
        for (std::size_t j = 0; j < b.open_count(); ++j) {
          phi_star[x * b.open_count() + j] = x * b.open_count() + link_b.phi[j];
          labels[x * b.open_count() + link_b.phi[j]] = gts::pair_label(
              a.point_label(x), link_b.closed_space.open_label(link_b.phi[j]));
        }
      Space lhs = gts::closed_of(l, labels, phi_star).closed_space;
      Space rhs = gts::limp(gts::closed_of(a).closed_space, link_b.closed_space);
      CHECK(lhs.same_presentation(rhs));
      CHECK(gts::find_isomorphism(lhs, rhs));
    }
}

TEST_CASE("hausdorff and regular carry over from the codomain into the function space") {
  Space a = fixtures::sierpinski();
  for (const Space& b : {fixtures::discrete2(), fixtures::fuzzy2()}) {
    REQUIRE(gts::check_hausdorff(b).holds);
    CHECK(gts::check_hausdorff(gts::limp(a, b)).holds);
  }
  Space b = fixtures::discrete2();
  REQUIRE(gts::check_regular(gts::closed_of(b)).holds);
  CHECK(gts::check_regular(gts::closed_of(gts::limp(a, b))).holds);
}

TEST_CASE("identities hold for random small operand pairs") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 10; ++t) {
    Space a = oracles::random_space(rng, 3, 3);
    Space b = oracles::random_space(rng, 3, 3);
    gts::LawReport report = gts::verify_identities(a, b);
    CHECK(report.all_hold);
  }
}
