#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gts/duality.hpp"
#include "gts/exec.hpp"
#include "gts/morphisms.hpp"
#include "gts/space.hpp"

namespace gts {

enum class PropertyName { sgts, compact, connected, hausdorff, regular };

const char* to_string(PropertyName name);
std::optional<PropertyName> property_from_string(std::string_view name);

/// Pair of opens lacking a pointwise max (is_max) or min witness.
struct SgtsFailure {
  std::size_t i = 0;
  std::size_t j = 0;
  bool is_max = false;
};

/// Distinct point pair with its least separating opens (a1 positive at x1,
/// a2 positive at x2, pointwise min zero), or no opens when inseparable.
struct HausdorffPair {
  std::size_t x1 = 0;
  std::size_t x2 = 0;
  std::optional<std::pair<std::size_t, std::size_t>> opens;
};

/// A continuous surjection onto the two-point discrete space: the point map
/// g and its adjoint g_bar over that space's four opens.
struct ConnectednessWitness {
  std::vector<std::size_t> g;
  std::vector<std::size_t> g_bar;
};

/// Point x against closed set k. Vacuous when the point has positive
/// membership in the closed set: the required min-zero separation is then
/// impossible by construction, so such pairs carry no obligation.
/// Otherwise `opens` holds the least (a1, a2) with r(x,a1) > 0, the closed
/// column dominated by a2, and pointwise min(a1, a2) zero.
struct RegularPair {
  std::size_t x = 0;
  std::size_t k = 0;
  bool vacuous = false;
  std::optional<std::pair<std::size_t, std::size_t>> opens;
};

using PropertyWitness =
    std::variant<SgtsFailure, HausdorffPair, ConnectednessWitness, RegularPair>;

struct PropertyReport {
  PropertyName property = PropertyName::sgts;
  bool holds = true;
  std::string note;
  std::vector<PropertyWitness> witnesses;
};

/// The fixed two-point discrete space: points 0, 1; opens the four subsets
/// with elementhood membership.
const Space& two_space();

/// Closure under pairwise pointwise min and max. Finite sup reduces to the
/// binary case by induction; the report notes the reduction. On failure
/// the first missing witness in pair order is reported.
PropertyReport check_sgts(const Space& space);

/// True iff every point has strictly positive degree in some family member.
bool check_cover(const OpenFamily& family);

/// Minimum-cardinality covering subfamily as sorted positions into the
/// family, lexicographically least among minimum ones; absent when the
/// family does not cover. Exact search: iterative deepening seeded by a
/// greedy upper bound.
std::optional<std::vector<std::size_t>> minimal_positive_subcover(const OpenFamily& family);

/// Always holds on finite spaces: any positive cover indexes into a finite
/// open set, so its image is a finite subfamily covering the same points.
/// The computational content lives in check_cover / minimal_positive_subcover.
PropertyReport check_compact(const Space& space);

/// No continuous surjection onto two_space(). Candidate point maps are
/// scanned in lexicographic order; a disconnection is reported as the least
/// witness pair (g, g_bar). Refuses when 2^|points| exceeds cap.
PropertyReport check_connected(const Space& space, std::size_t cap = default_cap());

/// Every distinct point pair separated by opens with pointwise min zero.
PropertyReport check_hausdorff(const Space& space);

/// Every point / closed-set pair either vacuous (positive membership) or
/// separated: r(x,A1) > 0, closed column dominated by A2, min(A1,A2) zero.
PropertyReport check_regular(const ClosedLink& link);

/// Executable form of the preservation propositions: true iff the property
/// verdict is identical on both sides of the isomorphism. Regularity is
/// judged with identity links on both sides. Throws IncompatibleWitness
/// when the isomorphism does not relate a and b.
bool check_preserved_under_iso(PropertyName property, const Space& a, const Space& b,
                               const Isomorphism& iso);

}  // namespace gts
