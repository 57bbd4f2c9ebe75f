#include "gts/relations.hpp"

#include <algorithm>
#include <map>

namespace gts {

namespace {

void require_same_points(const Space& a, const Space& b) {
  if (a.point_labels() != b.point_labels())
    throw Error(ErrorKind::point_set_mismatch,
                "spaces have different point label lists; relabel first");
}

void require_open(const Space& space, std::size_t index) {
  if (index >= space.open_count())
    throw Error(ErrorKind::index_out_of_range,
                "open index " + std::to_string(index) + " out of range");
}

}  // namespace

bool sets_equal(const SetRef& a, const SetRef& b) {
  require_same_points(*a.space, *b.space);
  require_open(*a.space, a.index);
  require_open(*b.space, b.index);
  for (std::size_t x = 0; x < a.space->point_count(); ++x)
    if (a.space->at(x, a.index) != b.space->at(x, b.index)) return false;
  return true;
}

bool is_subset(const SetRef& a, const SetRef& b) {
  require_same_points(*a.space, *b.space);
  require_open(*a.space, a.index);
  require_open(*b.space, b.index);
  for (std::size_t x = 0; x < a.space->point_count(); ++x)
    if (!(a.space->at(x, a.index) <= b.space->at(x, b.index))) return false;
  return true;
}

std::vector<Degree> column_min(const Space& space, std::size_t i, std::size_t j) {
  require_open(space, i);
  require_open(space, j);
  std::vector<Degree> out;
  out.reserve(space.point_count());
  for (std::size_t x = 0; x < space.point_count(); ++x)
    out.push_back(min(space.at(x, i), space.at(x, j)));
  return out;
}

std::vector<Degree> column_max(const OpenFamily& family) {
  const Space& space = *family.space;
  std::vector<Degree> out;
  out.reserve(space.point_count());
  for (std::size_t x = 0; x < space.point_count(); ++x) {
    Degree best = space.at(x, family.indices.front());
    for (std::size_t k = 1; k < family.indices.size(); ++k)
      best = max(best, space.at(x, family.indices[k]));
    out.push_back(best);
  }
  return out;
}

std::optional<std::size_t> find_column(const Space& space, const std::vector<Degree>& column) {
  for (std::size_t j = 0; j < space.open_count(); ++j) {
    bool equal = true;
    for (std::size_t x = 0; x < space.point_count() && equal; ++x)
      equal = space.at(x, j) == column[x];
    if (equal) return j;
  }
  return std::nullopt;
}

std::optional<std::size_t> intersection_witness(const Space& space, std::size_t i,
                                                std::size_t j) {
  return find_column(space, column_min(space, i, j));
}

std::optional<std::size_t> union_witness(const OpenFamily& family) {
  return find_column(*family.space, column_max(family));
}

std::optional<SubspaceWitness> find_subspace_witness(const Space& sub, const Space& super) {
  SubspaceWitness witness;
  witness.point_embedding.reserve(sub.point_count());
  for (std::size_t y = 0; y < sub.point_count(); ++y) {
    auto idx = super.point_index(sub.point_label(y));
    if (!idx)
      throw Error(ErrorKind::point_label_not_found,
                  "sub point '" + sub.point_label(y) + "' not found in super space");
    witness.point_embedding.push_back(*idx);
  }

  // nu must send every super open to a sub open with the same column
  // restricted to Y, and hit every sub open. Candidate sets are blocks of
  // equal columns, so a surjection exists iff every restricted super column
  // occurs among the sub columns and each block of equal sub columns is
  // matched by at least as many super opens.
  std::map<std::vector<Degree>, std::vector<std::size_t>> super_blocks;
  for (std::size_t j = 0; j < super.open_count(); ++j) {
    std::vector<Degree> restricted;
    restricted.reserve(sub.point_count());
    for (std::size_t y = 0; y < sub.point_count(); ++y)
      restricted.push_back(super.at(witness.point_embedding[y], j));
    super_blocks[std::move(restricted)].push_back(j);
  }
  std::map<std::vector<Degree>, std::vector<std::size_t>> sub_blocks;
  for (std::size_t b = 0; b < sub.open_count(); ++b)
    sub_blocks[sub.column(b)].push_back(b);

  for (const auto& [column, supers] : super_blocks)
    if (!sub_blocks.count(column)) return std::nullopt;  // empty candidate set
  for (const auto& [column, subs] : sub_blocks) {
    auto it = super_blocks.find(column);
    if (it == super_blocks.end() || it->second.size() < subs.size())
      return std::nullopt;  // block too small to be covered
  }

  // Lexicographically least nu: per block, take the least target while the
  // remaining block members can still cover the uncovered targets.
  witness.nu.assign(super.open_count(), 0);
  for (const auto& [column, supers] : super_blocks) {
    const auto& targets = sub_blocks.at(column);
    std::size_t uncovered = targets.size();
    std::size_t next_uncovered = 0;  // position in targets of least uncovered
    for (std::size_t k = 0; k < supers.size(); ++k) {
      std::size_t remaining = supers.size() - k;
      std::size_t chosen;
      if (uncovered == remaining) {
        chosen = targets[next_uncovered];
        ++next_uncovered;
        --uncovered;
      } else {
        chosen = targets.front();
        if (next_uncovered == 0) {
          ++next_uncovered;
          --uncovered;
        }
      }
      witness.nu[supers[k]] = chosen;
    }
  }
  return witness;
}

}  // namespace gts
