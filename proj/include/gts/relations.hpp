#pragma once

#include <optional>
#include <vector>

#include "gts/space.hpp"

namespace gts {

/// Column equality across (possibly distinct) spaces over the same ordered
/// point set. Throws PointSetMismatch when the point label lists differ.
bool sets_equal(const SetRef& a, const SetRef& b);

/// Pointwise <= of the referenced columns. Closed-space columns already
/// store r-bar, so every open/closed polarity combination is the same
/// entrywise comparison. Throws PointSetMismatch.
bool is_subset(const SetRef& a, const SetRef& b);

/// Least column index whose column equals the pointwise min of columns i, j.
std::optional<std::size_t> intersection_witness(const Space& space, std::size_t i,
                                                std::size_t j);

/// Least column index equal to the pointwise max over the family (the
/// finite sup).
std::optional<std::size_t> union_witness(const OpenFamily& family);

/// Witness that `sub` is a subspace of `super`: an injective embedding of
/// sub points into super points (by label) and a surjection nu from super
/// opens onto sub opens with r(y, A) = s(y, nu(A)) on the embedded points.
struct SubspaceWitness {
  std::vector<std::size_t> point_embedding;  // sub point -> super point index
  std::vector<std::size_t> nu;               // super open -> sub open index
};

/// Finds the lexicographically least witness, or nullopt when none exists.
/// Throws PointLabelNotFound when some sub point label is missing from the
/// super space.
std::optional<SubspaceWitness> find_subspace_witness(const Space& sub, const Space& super);

/// Pointwise min / max of two columns, and of a family (helpers shared by
/// the witness searches and the property checks).
std::vector<Degree> column_min(const Space& space, std::size_t i, std::size_t j);
std::vector<Degree> column_max(const OpenFamily& family);

/// Least column index with exactly this column value, if any.
std::optional<std::size_t> find_column(const Space& space, const std::vector<Degree>& column);

}  // namespace gts
