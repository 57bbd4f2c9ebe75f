#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gts/relations.hpp"
#include "gts/space.hpp"

namespace gts {

/// The dual space: points and opens swapped, matrix transposed.
Space dual(const Space& space);

/// A generalized topological space together with the closed space induced
/// by a bijection phi, where r-bar(x, phi(A)) = 1 - r(x, A). Owns copies of
/// both spaces.
struct ClosedLink {
  Space open_space;
  Space closed_space;
  std::vector<std::size_t> phi;      // open index -> closed index
  std::vector<std::size_t> phi_inv;  // closed index -> open index
};

/// Builds the induced closed space. phi defaults to the identity and
/// closed_labels to the open labels suffixed with "^c". Throws
/// NotABijection / DimensionMismatch on a bad phi or label list.
ClosedLink closed_of(const Space& space,
                     std::optional<std::vector<std::string>> closed_labels = std::nullopt,
                     std::optional<std::vector<std::size_t>> phi = std::nullopt);

struct ScgtsEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  bool is_max = false;                  // max witness vs binary-inf witness
  std::optional<std::size_t> witness;   // least matching closed column
};

/// Pairwise closure table of the closed space: for every pair of closed
/// sets a pointwise-max witness and a pointwise-min witness. Finite
/// families reduce to the binary case by induction; the report notes the
/// reduction.
struct ScgtsReport {
  bool passes = true;
  std::string note;
  std::vector<ScgtsEntry> entries;
  std::optional<ScgtsEntry> first_failure() const;
};

ScgtsReport verify_scgts(const ClosedLink& link);

/// Checks the induced closed-subspace relation: given a subspace witness
/// between the open spaces, constructs nu-bar = phi2 . nu . phi1^-1 and
/// verifies it is a degree-preserving surjection between the closed
/// spaces. Structural mismatches throw IncompatibleWitness; a witness that
/// merely fails the degree equations yields false.
bool closed_subspace_check(const ClosedLink& link_super, const ClosedLink& link_sub,
                           const SubspaceWitness& witness);

}  // namespace gts
