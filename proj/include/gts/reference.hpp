#pragma once

#include "gts/duality.hpp"
#include "gts/exec.hpp"
#include "gts/morphisms.hpp"
#include "gts/properties.hpp"
#include "gts/space.hpp"

namespace gts::reference {

/// Plain-loop baselines for the data-parallel kernels. Each one mirrors
/// the contract of its namesake exactly (same labels, same entry and
/// witness order) but is written as the simplest possible serial scan.
/// The equivalence tests compare them against the kernels in both
/// execution modes, and gts-bench uses them as the timing baseline.

Space limp_serial(const Space& a, const Space& b, std::size_t cap = default_cap());
Space tensor_serial(const Space& a, const Space& b, std::size_t cap = default_cap());
ScgtsReport verify_scgts_serial(const ClosedLink& link);
PropertyReport check_hausdorff_serial(const Space& space);
std::vector<ContinuousMap> enumerate_continuous_serial(const Space& source, const Space& target,
                                                       std::size_t cap = default_cap());

}  // namespace gts::reference
