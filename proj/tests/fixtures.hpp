#pragma once

#include <vector>

#include "gts/space.hpp"

namespace fixtures {

using gts::Degree;
using gts::Space;

// {a, b} with opens {}, {b}, {a,b}
inline Space sierpinski() {
  return Space({"a", "b"}, {"{}", "{b}", "{a,b}"},
               {{Degree::zero(), Degree::zero(), Degree::one()},
                {Degree::zero(), Degree::one(), Degree::one()}});
}

// {a, b} with all four subsets
inline Space discrete2() {
  return Space({"a", "b"}, {"{}", "{a}", "{b}", "{a,b}"},
               {{Degree::zero(), Degree::one(), Degree::zero(), Degree::one()},
                {Degree::zero(), Degree::zero(), Degree::one(), Degree::one()}});
}

// {a, b} with only {} and {a,b}
inline Space indiscrete2() {
  return Space({"a", "b"}, {"{}", "{a,b}"},
               {{Degree::zero(), Degree::one()}, {Degree::zero(), Degree::one()}});
}

// two points with fractional degrees, closed under min/max, Hausdorff
inline Space fuzzy2() {
  return Space({"a", "b"}, {"F0", "F1", "F2", "F3", "F4"},
               {{Degree::zero(), Degree::one(), Degree(1, 2), Degree::zero(), Degree(1, 2)},
                {Degree::zero(), Degree::one(), Degree::zero(), Degree(1, 3), Degree(1, 3)}});
}

// the corpus the cross-module laws run over; two_space() joins it in tests
inline std::vector<Space> corpus() {
  return {sierpinski(), discrete2(), indiscrete2(), fuzzy2()};
}

}  // namespace fixtures
