#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gts/exec.hpp"
#include "gts/space.hpp"

namespace gts {

/// A classical topology presentation: opens are subsets of the point list.
/// Canonical open labels are "{a,b}" with members in point order.
struct ClassicalTopology {
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> opens;
};

struct ClassicalImport {
  Space space;
  bool has_empty = false;
  bool has_full = false;
  bool intersection_closed = false;  // pairwise, computed set-theoretically
  bool union_closed = false;
  bool sgts = false;  // intersection_closed && union_closed
};

/// Indicator-matrix space for the family. The closure flags are computed on
/// the subsets themselves, independently of the matrix code, so they double
/// as an oracle for check_sgts on the imported space. Throws
/// UnknownPointLabel / DuplicateLabel.
ClassicalImport from_classical(const ClassicalTopology& t);

/// A fuzzy set as a total membership map over a point list.
struct FuzzySet {
  std::map<std::string, Degree> membership;
};

struct FuzzyImport {
  Space space;
  bool has_bottom = false;  // the all-zero set is in the family
  bool has_top = false;     // the all-one set is in the family
};

/// Space with entry A(x); sets get labels "F0", "F1", ... The all-zero and
/// all-one sets are reported, not required. Throws UnknownPointLabel when a
/// map key is not a point or a point is missing from a map.
FuzzyImport from_fuzzy(const std::vector<std::string>& points,
                       const std::vector<FuzzySet>& sets);

struct SubbaseGenerator {
  std::string label;
  std::vector<Degree> membership;  // over the carrier, in order
};

/// A generating family of (possibly fuzzy) sets over a named carrier.
struct Subbase {
  std::vector<std::string> carrier;
  std::vector<SubbaseGenerator> generators;
};

/// The generators (x, B) of the pointwise topology on the function carrier
/// of limp(a, b): one generator per open, equal to that matrix column.
/// When both operands are classical the set comprehension
/// {f : f(x) in B} is recomputed independently and compared.
Subbase pointwise_subbase(const Space& a, const Space& b, std::size_t cap = default_cap());

/// The generators f of the tensor topology on the pair carrier of
/// tensor(a, b). When both operands are classical the comprehension
/// {(x, y) : y in f(x)} is recomputed independently and compared.
Subbase tensor_subbase(const Space& a, const Space& b, std::size_t cap = default_cap());

/// The subset family when every degree is 0 or 1; absent otherwise.
std::optional<ClassicalTopology> export_classical(const Space& space);

/// Smallest extension of the open family closed under pairwise pointwise
/// min and max. Adjoined columns get labels "cl0", "cl1", ... Throws
/// SearchSpaceTooLarge once the open count would exceed cap.
Space close_under_min_max(const Space& space, std::size_t cap = default_cap());

}  // namespace gts
