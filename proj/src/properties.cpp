#include "gts/properties.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>

#include "gts/relations.hpp"

namespace gts {

const char* to_string(PropertyName name) {
  switch (name) {
    case PropertyName::sgts: return "sgts";
    case PropertyName::compact: return "compact";
    case PropertyName::connected: return "connected";
    case PropertyName::hausdorff: return "hausdorff";
    case PropertyName::regular: return "regular";
  }
  return "?";
}

std::optional<PropertyName> property_from_string(std::string_view name) {
  if (name == "sgts") return PropertyName::sgts;
  if (name == "compact") return PropertyName::compact;
  if (name == "connected") return PropertyName::connected;
  if (name == "hausdorff") return PropertyName::hausdorff;
  if (name == "regular") return PropertyName::regular;
  return std::nullopt;
}

const Space& two_space() {
  static const Space instance(
      {"0", "1"}, {"{}", "{0}", "{1}", "{0,1}"},
      {{Degree::zero(), Degree::one(), Degree::zero(), Degree::one()},
       {Degree::zero(), Degree::zero(), Degree::one(), Degree::one()}},
      SpaceKind::open_space);
  return instance;
}

PropertyReport check_sgts(const Space& space) {
  PropertyReport report;
  report.property = PropertyName::sgts;
  report.note =
      "pairwise min and max witnesses; finite sup reduces to the binary case by induction";
  for (std::size_t i = 0; i < space.open_count(); ++i)
    for (std::size_t j = i; j < space.open_count(); ++j) {
      if (!intersection_witness(space, i, j)) {
        report.holds = false;
        report.witnesses.push_back(SgtsFailure{i, j, false});
        return report;
      }
      if (!union_witness(OpenFamily(space, {i, j}))) {
        report.holds = false;
        report.witnesses.push_back(SgtsFailure{i, j, true});
        return report;
      }
    }
  return report;
}

bool check_cover(const OpenFamily& family) {
  const Space& space = *family.space;
  for (std::size_t x = 0; x < space.point_count(); ++x) {
    bool covered = false;
    for (std::size_t p = 0; p < family.indices.size() && !covered; ++p)
      covered = !space.at(x, family.indices[p]).is_zero();
    if (!covered) return false;
  }
  return true;
}

std::optional<std::vector<std::size_t>> minimal_positive_subcover(const OpenFamily& family) {
  const Space& space = *family.space;
  const std::size_t n = space.point_count();
  const std::size_t f = family.indices.size();

  std::vector<boost::dynamic_bitset<>> covers(f, boost::dynamic_bitset<>(n));
  for (std::size_t p = 0; p < f; ++p)
    for (std::size_t x = 0; x < n; ++x)
      if (!space.at(x, family.indices[p]).is_zero()) covers[p].set(x);

  boost::dynamic_bitset<> target(n);
  target.set();
  boost::dynamic_bitset<> all(n);
  for (const auto& c : covers) all |= c;
  if (all != target) return std::nullopt;
  if (n == 0) return std::vector<std::size_t>{};

  // greedy upper bound
  std::size_t upper = 0;
  {
    boost::dynamic_bitset<> covered(n);
    while (covered != target) {
      std::size_t best = 0, gain = 0;
      for (std::size_t p = 0; p < f; ++p) {
        std::size_t g = (covers[p] - covered).count();
        if (g > gain) {
          gain = g;
          best = p;
        }
      }
      covered |= covers[best];
      ++upper;
    }
  }

  // union of positions p.. onward, for pruning
  std::vector<boost::dynamic_bitset<>> suffix(f + 1, boost::dynamic_bitset<>(n));
  for (std::size_t p = f; p-- > 0;) suffix[p] = suffix[p + 1] | covers[p];

  std::vector<std::size_t> chosen;
  // first hit of the size-k sweep in lexicographic position order is the
  // lexicographically least minimum subcover
  auto dfs = [&](auto&& self, std::size_t next, std::size_t left,
                 const boost::dynamic_bitset<>& covered) -> bool {
    if (covered == target) return true;
    if (left == 0 || next >= f) return false;
    if ((covered | suffix[next]) != target) return false;
    for (std::size_t p = next; p + left <= f; ++p) {
      chosen.push_back(p);
      if (self(self, p + 1, left - 1, covered | covers[p])) return true;
      chosen.pop_back();
    }
    return false;
  };

  for (std::size_t k = 1; k <= upper; ++k) {
    chosen.clear();
    boost::dynamic_bitset<> covered(n);
    if (dfs(dfs, 0, k, covered)) return chosen;
  }
  return std::nullopt;
}

PropertyReport check_compact(const Space& space) {
  (void)space;
  PropertyReport report;
  report.property = PropertyName::compact;
  report.note =
      "finite open set: every positive cover has finite image, which is its own "
      "finite subcover";
  return report;
}

PropertyReport check_connected(const Space& space, std::size_t cap) {
  PropertyReport report;
  report.property = PropertyName::connected;
  const std::size_t n = space.point_count();
  if (n == 0) {
    report.note = "no points, so no surjection onto the two-point space exists (vacuous)";
    return report;
  }
  auto total = checked_pow(2, n);
  if (!total || *total > cap)
    throw Error(ErrorKind::search_space_too_large,
                "candidate point maps exceed cap " + std::to_string(cap));

  const Space& two = two_space();
  for (std::size_t c = 0; c < *total; ++c) {
    std::vector<std::size_t> g(n);
    bool has0 = false, has1 = false;
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = (c >> (n - 1 - i)) & 1;
      if (g[i])
        has1 = true;
      else
        has0 = true;
    }
    if (!has0 || !has1) continue;

    std::vector<std::size_t> g_bar(two.open_count());
    bool viable = true;
    for (std::size_t s = 0; s < two.open_count() && viable; ++s) {
      std::vector<Degree> pull;
      pull.reserve(n);
      for (std::size_t x = 0; x < n; ++x) pull.push_back(two.at(g[x], s));
      auto hit = find_column(space, pull);
      if (hit)
        g_bar[s] = *hit;
      else
        viable = false;
    }
    if (viable) {
      report.holds = false;
      report.note = "continuous surjection onto the two-point space found";
      report.witnesses.push_back(ConnectednessWitness{std::move(g), std::move(g_bar)});
      return report;
    }
  }
  report.note = "no surjection onto the two-point space admits an adjoint";
  return report;
}

PropertyReport check_hausdorff(const Space& space) {
  PropertyReport report;
  report.property = PropertyName::hausdorff;
  const std::size_t n = space.point_count();
  if (n < 2) {
    report.note = "fewer than two points (vacuous)";
    return report;
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = x1 + 1; x2 < n; ++x2) pairs.emplace_back(x1, x2);

  std::vector<HausdorffPair> found(pairs.size());
  par_for(pairs.size(), [&](std::size_t p) {
    auto [x1, x2] = pairs[p];
    found[p].x1 = x1;
    found[p].x2 = x2;
    for (std::size_t a1 = 0; a1 < space.open_count() && !found[p].opens; ++a1) {
      if (space.at(x1, a1).is_zero()) continue;
      for (std::size_t a2 = 0; a2 < space.open_count(); ++a2) {
        if (space.at(x2, a2).is_zero()) continue;
        bool disjoint = true;
        for (std::size_t x = 0; x < n && disjoint; ++x)
          disjoint = min(space.at(x, a1), space.at(x, a2)).is_zero();
        if (disjoint) {
          found[p].opens = {a1, a2};
          break;
        }
      }
    }
  });

  for (auto& pair : found) {
    if (!pair.opens) {
      report.holds = false;
      report.note = "inseparable point pair";
      report.witnesses.assign(1, pair);
      return report;
    }
  }
  for (auto& pair : found) report.witnesses.push_back(std::move(pair));
  return report;
}

PropertyReport check_regular(const ClosedLink& link) {
  PropertyReport report;
  report.property = PropertyName::regular;
  report.note =
      "pairs where the point has positive membership in the closed set cannot meet "
      "the min-zero separation and are recorded as vacuous";
  const Space& space = link.open_space;
  const Space& closed = link.closed_space;
  const std::size_t n = space.point_count();
  const std::size_t m = space.open_count();

  std::vector<RegularPair> found(n * closed.open_count());
  par_for(found.size(), [&](std::size_t idx) {
    const std::size_t x = idx / closed.open_count();
    const std::size_t k = idx % closed.open_count();
    RegularPair& entry = found[idx];
    entry.x = x;
    entry.k = k;
    if (!closed.at(x, k).is_zero()) {
      entry.vacuous = true;
      return;
    }
    for (std::size_t a1 = 0; a1 < m && !entry.opens; ++a1) {
      if (space.at(x, a1).is_zero()) continue;
      for (std::size_t a2 = 0; a2 < m; ++a2) {
        bool ok = true;
        for (std::size_t xp = 0; xp < n && ok; ++xp)
          ok = closed.at(xp, k) <= space.at(xp, a2) &&
               min(space.at(xp, a1), space.at(xp, a2)).is_zero();
        if (ok) {
          entry.opens = {a1, a2};
          break;
        }
      }
    }
  });

  for (auto& entry : found) {
    if (!entry.vacuous && !entry.opens) {
      report.holds = false;
      report.witnesses.assign(1, entry);
      return report;
    }
  }
  for (auto& entry : found) report.witnesses.push_back(std::move(entry));
  return report;
}

bool check_preserved_under_iso(PropertyName property, const Space& a, const Space& b,
                               const Isomorphism& iso) {
  const ContinuousMap& m = iso.map;
  if (!m.source || !m.target || !m.source->same_presentation(a) ||
      !m.target->same_presentation(b))
    throw Error(ErrorKind::incompatible_witness, "isomorphism does not relate these spaces");
  if (m.f.size() != a.point_count() || m.f_bar.size() != b.open_count() ||
      a.point_count() != b.point_count() || a.open_count() != b.open_count())
    throw Error(ErrorKind::incompatible_witness, "isomorphism has wrong dimensions");
  std::vector<bool> pt(b.point_count(), false), op(a.open_count(), false);
  for (std::size_t v : m.f) {
    if (v >= pt.size() || pt[v])
      throw Error(ErrorKind::incompatible_witness, "point component is not a bijection");
    pt[v] = true;
  }
  for (std::size_t v : m.f_bar) {
    if (v >= op.size() || op[v])
      throw Error(ErrorKind::incompatible_witness, "open component is not a bijection");
    op[v] = true;
  }
  for (std::size_t x = 0; x < a.point_count(); ++x)
    for (std::size_t j = 0; j < b.open_count(); ++j)
      if (b.at(m.f[x], j) != a.at(x, m.f_bar[j]))
        throw Error(ErrorKind::incompatible_witness, "pair is not adjoint");

  auto verdict = [property](const Space& s) {
    switch (property) {
      case PropertyName::sgts: return check_sgts(s).holds;
      case PropertyName::compact: return check_compact(s).holds;
      case PropertyName::connected: return check_connected(s).holds;
      case PropertyName::hausdorff: return check_hausdorff(s).holds;
      case PropertyName::regular: return check_regular(closed_of(s)).holds;
    }
    return false;
  };
  return verdict(a) == verdict(b);
}

}  // namespace gts
