#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gts/duality.hpp"
#include "gts/exec.hpp"
#include "gts/space.hpp"

namespace gts {

// f maps source points to target points, f_bar maps target opens back to
// source opens.  Adjointness: target(f(x), B) == source(x, f_bar(B)).
// Non-owning; the spaces must outlive the map.
struct ContinuousMap {
  const Space* source = nullptr;
  const Space* target = nullptr;
  std::vector<std::size_t> f;
  std::vector<std::size_t> f_bar;
};

// A continuous pair whose components are both bijections.
struct Isomorphism {
  ContinuousMap map;
};

// Validates totality, ranges, and adjointness at every (point, open) pair.
// Scans points in order and reports the first violation.
ContinuousMap check_continuous(const Space& source, const Space& target,
                               std::vector<std::size_t> f, std::vector<std::size_t> f_bar);

// Every adjoint pair (f, f_bar), ordered lexicographically by (f, f_bar).
// Refuses when |target points| ^ |source points| exceeds cap.
std::vector<ContinuousMap> enumerate_continuous(const Space& source, const Space& target,
                                                std::size_t cap = default_cap());

// Lexicographically least isomorphism, or absent.  Points are matched by
// backtracking over sorted-row classes; opens then match by exact column
// equality.
std::optional<Isomorphism> find_isomorphism(const Space& a, const Space& b);

// The pair (f, phi_source . f_bar . phi_target^-1) between the closed
// spaces of the links, verified before returning.  The result refers into
// the links.
ContinuousMap induced_closed_map(const ContinuousMap& m, const ClosedLink& link_source,
                                 const ClosedLink& link_target);

}  // namespace gts
