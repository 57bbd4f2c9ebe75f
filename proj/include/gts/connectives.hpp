#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gts/exec.hpp"
#include "gts/space.hpp"

namespace gts {

/// Which functions populate an exponential carrier: every function of the
/// underlying sets (the default reading), or only those admitting at least
/// one adjoint open map back.
enum class FunctionCarrier { all, adjoint_only };

/// Canonical label schemes. Deterministic, so repeated construction of any
/// connective is bit-identical.
std::string function_label(const std::vector<std::size_t>& graph);
std::string pair_label(const std::string& left, const std::string& right);
std::string inl_label(const std::string& inner);
std::string inr_label(const std::string& inner);

/// Linear implication: points are the functions a-points -> b-points in
/// lexicographic graph order, opens are the pairs (x, B) in lexicographic
/// order, entry (f, (x, B)) = s(f(x), B). Refuses when the carrier
/// |b.points| ^ |a.points| exceeds cap.
Space limp(const Space& a, const Space& b, std::size_t cap = default_cap(),
           FunctionCarrier carrier = FunctionCarrier::all);

/// Tensor product: points are the pairs (x, y), opens the functions
/// a-points -> b-opens, entry ((x, y), f) = s(y, f(x)). Cross-checked
/// against its defining identity dual(limp(a, dual(b))) on every call.
Space tensor(const Space& a, const Space& b, std::size_t cap = default_cap());

/// Tensor sum: points are the functions a-opens -> b-points, opens the
/// pairs (A, B), entry (f, (A, B)) = s(f(A), B). Cross-checked against
/// limp(dual(a), b) on every call.
Space tensor_sum(const Space& a, const Space& b, std::size_t cap = default_cap());

/// Topological sum: tagged disjoint union of points, pairs of opens,
/// entry (inl x, (A, B)) = r(x, A) and (inr y, (A, B)) = s(y, B).
Space sum(const Space& a, const Space& b);

/// Topological product: pairs of points, tagged disjoint union of opens,
/// entry ((x, y), inl A) = r(x, A) and ((x, y), inr B) = s(y, B).
Space product(const Space& a, const Space& b);

/// The unit for the sum: no points, one open labeled "1".
Space unit_zero();

/// The unit for the product: one point labeled "1", no opens.
Space unit_top();

struct LawResult {
  std::string law;
  bool holds = false;
  bool skipped = false;  // carrier cap exceeded; never counted as failure
  std::string detail;
};

/// One entry per algebraic law: unit laws for sum and product, the dual
/// relation between the units, the sum/product De Morgan identity, the
/// defining identities of tensor and tensor sum, and the closed
/// function-space law (complementing a linear implication equals the
/// linear implication of the complemented operands, with the open pairs
/// carried across by (x, B) -> (x, phi(B))).
struct LawReport {
  bool all_hold = true;    // every non-skipped law holds
  bool any_skipped = false;
  std::vector<LawResult> laws;
};

LawReport verify_identities(const Space& a, const Space& b, std::size_t cap = default_cap());

}  // namespace gts
