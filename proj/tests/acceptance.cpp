// Acceptance gate: twelve executable laws, one line each, exit 0 iff all
// hold. Each check recomputes its expectation independently of the code
// under test (brute-force scans, set comprehensions, textbook definitions).
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gts/connectives.hpp"
#include "gts/duality.hpp"
#include "gts/format.hpp"
#include "gts/interp.hpp"
#include "gts/morphisms.hpp"
#include "gts/properties.hpp"
#include "gts/relations.hpp"
#include "oracles.hpp"

using gts::Degree;
using gts::Space;

namespace {

int failures = 0;

void report(int index, bool pass, const std::string& name, const std::string& detail) {
  if (!pass) ++failures;
  std::printf("[%s] %2d  %s (%s)\n", pass ? "PASS" : "FAIL", index, name.c_str(),
              detail.c_str());
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<Space> fixture_set() {
  return {fixtures::sierpinski(), fixtures::discrete2(), fixtures::indiscrete2(),
          gts::two_space(), fixtures::fuzzy2()};
}

std::vector<std::size_t> decode_graph(std::size_t c, std::size_t domain, std::size_t base) {
  std::vector<std::size_t> g(domain);
  for (std::size_t i = domain; i-- > 0;) {
    g[i] = c % base;
    c /= base;
  }
  return g;
}

// 1 + 2: closure verification and the inclusion-flip law share one corpus
void criteria_closure_and_antitone() {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1001);
  std::vector<gts::ClosedLink> links;
  bool closure_ok = true;
  for (int t = 0; t < 200; ++t) {
    Space closed = gts::close_under_min_max(oracles::random_space(rng, 4, 6), 4096);
    gts::ClosedLink link = gts::closed_of(closed);
    gts::ScgtsReport verdict = gts::verify_scgts(link);
    const std::size_t m = closed.open_count();
    closure_ok = closure_ok && verdict.passes && !verdict.first_failure() &&
                 verdict.entries.size() == m * (m + 1);
    links.push_back(std::move(link));
  }
  double elapsed = seconds_since(start);
  report(1, closure_ok && elapsed < 5.0,
         "min/max-closed corpora verify as strong closed spaces",
         "200 random spaces, identity link, " + std::to_string(elapsed).substr(0, 5) + "s");

  bool antitone_ok = true;
  std::size_t pairs = 0;
  for (const gts::ClosedLink& link : links)
    for (std::size_t i = 0; i < link.open_space.open_count(); ++i)
      for (std::size_t j = 0; j < link.open_space.open_count(); ++j) {
        ++pairs;
        bool forward = gts::is_subset(gts::set_ref(link.open_space, i),
                                      gts::set_ref(link.open_space, j));
        bool flipped = gts::is_subset(gts::set_ref(link.closed_space, link.phi[j]),
                                      gts::set_ref(link.closed_space, link.phi[i]));
        antitone_ok = antitone_ok && forward == flipped;
      }
  report(2, antitone_ok, "complement flips inclusion on every open pair",
         std::to_string(pairs) + " ordered pairs, exact");
}

void criterion_closed_subspaces() {
  std::mt19937_64 rng(1003);
  bool ok = true;
  for (int t = 0; t < 50; ++t) {
    Space super = oracles::random_space(rng, 4, 5);
    const std::size_t n = super.point_count();
    std::uniform_int_distribution<std::uint32_t> mask_dist(1, (std::uint32_t{1} << n) - 1);
    std::uint32_t mask = mask_dist(rng);

    std::vector<std::string> sub_points;
    std::vector<Degree> cells;
    for (std::size_t x = 0; x < n; ++x) {
      if (!((mask >> x) & 1)) continue;
      sub_points.push_back(super.point_label(x));
      for (std::size_t j = 0; j < super.open_count(); ++j) cells.push_back(super.at(x, j));
    }
    Space sub(sub_points, super.open_labels(), std::move(cells), gts::SpaceKind::open_space);

    auto witness = gts::find_subspace_witness(sub, super);
    ok = ok && witness.has_value() &&
         gts::closed_subspace_check(gts::closed_of(super), gts::closed_of(sub), *witness);
  }
  report(3, ok, "subspace relations descend to the induced closed spaces",
         "50 constructed restriction pairs, exact");
}

void criterion_induced_closed_maps() {
  bool ok = true;
  std::size_t maps = 0;
  std::vector<Space> fixture = fixture_set();
  for (const Space& a : fixture)
    for (const Space& b : fixture) {
      gts::ClosedLink link_a = gts::closed_of(a);
      gts::ClosedLink link_b = gts::closed_of(b);
      for (const gts::ContinuousMap& m : gts::enumerate_continuous(a, b, 100)) {
        ++maps;
        try {
          gts::ContinuousMap closed = gts::induced_closed_map(m, link_a, link_b);
          for (std::size_t x = 0; x < a.point_count(); ++x)
            for (std::size_t k = 0; k < b.open_count(); ++k)
              ok = ok && link_b.closed_space.at(closed.f[x], k) ==
                             link_a.closed_space.at(x, closed.f_bar[k]);
        } catch (const gts::Error&) {
          ok = false;
        }
      }
    }
  report(4, ok && maps > 0, "every continuous map induces a verified closed map",
         std::to_string(maps) + " maps across 25 fixture pairs, exact");
}

void criterion_preservation() {
  std::mt19937_64 rng(1005);
  bool ok = true;
  for (int t = 0; t < 100; ++t) {
    Space a = oracles::random_space(rng, 4, 6);
    Space b = gts::relabel(a, oracles::random_permutation(rng, a.point_count()),
                           oracles::random_permutation(rng, a.open_count()));
    ok = ok && gts::check_compact(a).holds == gts::check_compact(b).holds;
    ok = ok && gts::check_connected(a).holds == gts::check_connected(b).holds;
    ok = ok && gts::check_hausdorff(a).holds == gts::check_hausdorff(b).holds;
    ok = ok && gts::check_regular(gts::closed_of(a)).holds ==
                   gts::check_regular(gts::closed_of(b)).holds;
  }
  report(5, ok, "property verdicts survive point/open permutations",
         "100 random spaces, four properties each, exact");
}

void criterion_connectedness_oracle() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::size_t checked = 0;
  std::size_t on_three = 0;
  for (std::size_t n = 0; n <= 3; ++n)
    for (const oracles::Family& family : oracles::all_topologies(n)) {
      if (n == 3) ++on_three;
      Space space = gts::from_classical(oracles::to_classical(n, family)).space;
      bool lib_disconnected = !gts::check_connected(space).holds;
      ok = ok && lib_disconnected == oracles::brute_disconnected(space);
      ++checked;
    }
  double elapsed = seconds_since(start);
  ok = ok && on_three == 29 && elapsed < 10.0;
  report(6, ok, "connectedness matches brute force on every small classical topology",
         std::to_string(checked) + " topologies, " + std::to_string(on_three) +
             " on 3 labeled points, " + std::to_string(elapsed).substr(0, 5) + "s");
}

void criterion_inheritance() {
  bool ok = true;
  std::size_t hausdorff_cases = 0, regular_cases = 0;
  std::vector<Space> fixture = fixture_set();
  for (const Space& a : fixture)
    for (const Space& b : fixture) {
      auto carrier = gts::checked_pow(b.point_count(), a.point_count());
      if (!carrier || *carrier > 256) continue;
      Space l = gts::limp(a, b);
      if (gts::check_hausdorff(b).holds) {
        ++hausdorff_cases;
        ok = ok && gts::check_hausdorff(l).holds;
      }
      if (gts::check_regular(gts::closed_of(b)).holds) {
        ++regular_cases;
        ok = ok && gts::check_regular(gts::closed_of(l)).holds;
      }
    }
  ok = ok && hausdorff_cases > 0 && regular_cases > 0;
  report(7, ok, "hausdorff and regular carry from the codomain into the function space",
         std::to_string(hausdorff_cases) + " hausdorff and " + std::to_string(regular_cases) +
             " regular instances, exact");
}

void criterion_closed_function_space() {
  bool ok = true;
  std::vector<Space> fixture = fixture_set();
  for (const Space& a : fixture)
    for (const Space& b : fixture) {
      Space l = gts::limp(a, b);
      gts::ClosedLink link_b = gts::closed_of(b);
      const std::size_t mb = b.open_count();
      std::vector<std::size_t> phi_star(l.open_count());
      std::vector<std::string> labels(l.open_count());
      for (std::size_t x = 0; x < a.point_count(); ++x)
        for (std::size_t j = 0; j < mb; ++j) {
          phi_star[x * mb + j] = x * mb + link_b.phi[j];
          labels[x * mb + link_b.phi[j]] = gts::pair_label(
              a.point_label(x), link_b.closed_space.open_label(link_b.phi[j]));
        }
      Space lhs = gts::closed_of(l, labels, phi_star).closed_space;

      for (std::size_t r = 0; r < l.point_count(); ++r) {
        auto graph = decode_graph(r, a.point_count(), b.point_count());
        for (std::size_t x = 0; x < a.point_count(); ++x)
          for (std::size_t j = 0; j < mb; ++j)
            ok = ok && lhs.at(r, x * mb + link_b.phi[j]) ==
                           link_b.closed_space.at(graph[x], link_b.phi[j]);
      }

      Space rhs = gts::limp(gts::closed_of(a).closed_space, link_b.closed_space);
      ok = ok && lhs.same_presentation(rhs) && gts::find_isomorphism(lhs, rhs).has_value();
    }
  report(8, ok, "complementing a function space equals the function space of complements",
         "entrywise identity plus isomorphism on 25 fixture pairs, exact");
}

void criterion_law_suite() {
  bool ok = true;
  std::vector<Space> fixture = fixture_set();
  for (const Space& a : fixture)
    for (const Space& b : fixture) {
      gts::LawReport r = gts::verify_identities(a, b);
      ok = ok && r.all_hold && !r.any_skipped;
    }
  std::mt19937_64 rng(1009);
  for (int t = 0; t < 50; ++t) {
    Space a = oracles::random_space(rng, 3, 3);
    Space b = oracles::random_space(rng, 3, 3);
    gts::LawReport r = gts::verify_identities(a, b);
    ok = ok && r.all_hold && !r.any_skipped;
  }
  report(9, ok, "unit, De Morgan, and function-space laws hold",
         "25 fixture pairs plus 50 random pairs, seven laws each, exact");
}

void criterion_definitional_identities() {
  bool ok = true;
  std::vector<Space> fixture = fixture_set();
  for (const Space& a : fixture)
    for (const Space& b : fixture) {
      ok = ok && gts::tensor(a, b).same_presentation(gts::dual(gts::limp(a, gts::dual(b))));
      ok = ok && gts::tensor_sum(a, b).same_presentation(gts::limp(gts::dual(a), b));
    }
  report(10, ok, "tensor and tensor-sum match their defining compositions",
         "25 fixture pairs, exact matrix equality");
}

void criterion_subbase_comprehensions() {
  bool ok = true;
  std::vector<Space> classical = {fixtures::sierpinski(), fixtures::discrete2(),
                                  fixtures::indiscrete2(), gts::two_space()};
  for (const Space& a : classical)
    for (const Space& b : classical) {
      auto carrier = gts::checked_pow(b.point_count(), a.point_count());
      auto tensor_opens = gts::checked_pow(b.open_count(), a.point_count());
      if (!carrier || *carrier > 256 || !tensor_opens || *tensor_opens > 256) continue;

      gts::Subbase pw = gts::pointwise_subbase(a, b);
      for (std::size_t c = 0; c < pw.carrier.size(); ++c) {
        auto graph = decode_graph(c, a.point_count(), b.point_count());
        for (std::size_t x = 0; x < a.point_count(); ++x)
          for (std::size_t j = 0; j < b.open_count(); ++j) {
            bool member = b.at(graph[x], j).is_one();
            ok = ok && pw.generators[x * b.open_count() + j].membership[c] ==
                           (member ? Degree::one() : Degree::zero());
          }
      }

      gts::Subbase tn = gts::tensor_subbase(a, b);
      for (std::size_t g = 0; g < tn.generators.size(); ++g) {
        auto graph = decode_graph(g, a.point_count(), b.open_count());
        for (std::size_t x = 0; x < a.point_count(); ++x)
          for (std::size_t y = 0; y < b.point_count(); ++y) {
            bool member = b.at(y, graph[x]).is_one();
            ok = ok && tn.generators[g].membership[x * b.point_count() + y] ==
                           (member ? Degree::one() : Degree::zero());
          }
      }
    }
  report(11, ok, "subbase comprehension oracles match the function-space matrices",
         "16 classical fixture pairs, both subbases, exact");
}

void criterion_round_trip() {
  bool ok = true;
  std::vector<Space> spaces = fixtures::corpus();
  spaces.push_back(gts::two_space());
  spaces.push_back(gts::unit_zero());
  spaces.push_back(gts::unit_top());
  spaces.push_back(gts::dual(fixtures::fuzzy2()));
  spaces.push_back(gts::closed_of(fixtures::sierpinski()).closed_space);
  std::mt19937_64 rng(1012);
  for (int t = 0; t < 500; ++t) spaces.push_back(oracles::random_space(rng));
  for (const Space& s : spaces) {
    std::string doc = gts::serialize_space(s);
    Space back = gts::parse_space(doc);
    ok = ok && back == s && back.kind() == s.kind() && gts::serialize_space(back) == doc;
  }
  report(12, ok, "document round-trip is bit-exact",
         std::to_string(spaces.size()) + " spaces including every fixture, exact");
}

}  // namespace

int main() {
  criteria_closure_and_antitone();
  criterion_closed_subspaces();
  criterion_induced_closed_maps();
  criterion_preservation();
  criterion_connectedness_oracle();
  criterion_inheritance();
  criterion_closed_function_space();
  criterion_law_suite();
  criterion_definitional_identities();
  criterion_subbase_comprehensions();
  criterion_round_trip();
  if (failures == 0) {
    std::printf("all 12 criteria hold\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
