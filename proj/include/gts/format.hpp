#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gts/space.hpp"

namespace gts {

/// Parses the line-oriented space document grammar:
///
///   gts 1
///   kind: open|closed|dual|derived
///   points: <label> ...
///   opens: <label> ...
///   matrix:
///   <point-label>: d1 d2 ...
///
/// One matrix row per point, in point order. Rationals are "p/q" or "n"
/// with value in [0,1]. '#' starts a comment, blank lines are ignored, and
/// a trailing carriage return is tolerated. Errors carry 1-based line/col.
Space parse_space(std::string_view text);

/// Canonical document: fields in the fixed order above, tokens separated
/// by single spaces, rationals in lowest terms, newline-terminated.
/// parse(serialize(s)) == s, and serialize(parse(d)) canonicalizes d.
std::string serialize_space(const Space& space);

/// An open-to-closed bijection file: one "<open-label> <closed-label>"
/// line per open of the space; line order fixes the closed index order.
struct PhiDocument {
  std::vector<std::size_t> phi;             // open index -> closed index
  std::vector<std::string> closed_labels;   // in closed index order
};

/// Throws NotABijection when an open is missing, repeated, or unknown;
/// SyntaxError on malformed lines.
PhiDocument parse_phi(std::string_view text, const Space& space);

}  // namespace gts
