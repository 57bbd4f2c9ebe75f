#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gts/degree.hpp"

namespace gts {

enum class SpaceKind { open_space, closed_space, dual_space, derived };

const char* to_string(SpaceKind kind);
std::optional<SpaceKind> space_kind_from_string(std::string_view name);

/// A finite generalized topological space: points, opens, and an exact
/// rational membership matrix with entry (i,j) = r(point i, open j).
/// Closed and dual spaces use the same representation; `kind` is metadata
/// only and never changes behavior. Instances are immutable after
/// construction and safe to share between threads.
class Space {
public:
  Space(std::vector<std::string> point_labels,
        std::vector<std::string> open_labels,
        std::vector<std::vector<Degree>> rows,
        SpaceKind kind = SpaceKind::open_space);

  /// Row-major flat matrix constructor (used by the bulk builders).
  Space(std::vector<std::string> point_labels,
        std::vector<std::string> open_labels,
        std::vector<Degree> cells,
        SpaceKind kind);

  std::size_t point_count() const { return points_.size(); }
  std::size_t open_count() const { return opens_.size(); }

  const std::vector<std::string>& point_labels() const { return points_; }
  const std::vector<std::string>& open_labels() const { return opens_; }
  const std::string& point_label(std::size_t i) const { return points_[i]; }
  const std::string& open_label(std::size_t j) const { return opens_[j]; }

  std::optional<std::size_t> point_index(std::string_view label) const;
  std::optional<std::size_t> open_index(std::string_view label) const;

  /// Unchecked entry access; use gts::degree() for the checked operation.
  const Degree& at(std::size_t point, std::size_t open) const {
    return cells_[point * opens_.size() + open];
  }

  std::span<const Degree> row(std::size_t point) const {
    return {cells_.data() + point * opens_.size(), opens_.size()};
  }
  std::vector<Degree> column(std::size_t open) const;

  SpaceKind kind() const { return kind_; }
  Space with_kind(SpaceKind kind) const;

  /// Label lists and matrix equal; kind ignored. The laws of the library
  /// ("equal matrices up to the canonical label scheme") compare with this.
  bool same_presentation(const Space& other) const;

  friend bool operator==(const Space& a, const Space& b) {
    return a.kind_ == b.kind_ && a.same_presentation(b);
  }

private:
  void validate() const;

  std::vector<std::string> points_;
  std::vector<std::string> opens_;
  std::vector<Degree> cells_;  // row-major
  SpaceKind kind_ = SpaceKind::open_space;
};

/// Checked entry lookup: r(point, open). Throws IndexOutOfRange.
const Degree& degree(const Space& space, std::size_t point, std::size_t open);

/// Valid label: nonempty, no whitespace or control characters, no ':' and
/// no '#', so every label survives the space-document grammar unescaped.
bool is_valid_label(std::string_view label);

enum class Polarity { open_set, closed_set };

/// Addresses one column of a space. Polarity records whether the column is
/// read as an open or a closed set; the matrix already stores the right
/// membership function either way (closed spaces store r-bar directly).
struct SetRef {
  const Space* space = nullptr;
  std::size_t index = 0;
  Polarity polarity = Polarity::open_set;
};

/// Ref with polarity derived from the space's kind.
SetRef set_ref(const Space& space, std::size_t index);

/// A finite indexed family of opens of one space; repeats allowed.
/// Construction rejects an empty index list and out-of-range indices.
struct OpenFamily {
  OpenFamily(const Space& space, std::vector<std::size_t> indices);

  const Space* space;
  std::vector<std::size_t> indices;
};

/// Reorders points and opens. order[i] is the old index placed at new
/// position i. Throws NotAPermutation.
Space relabel(const Space& space, const std::vector<std::size_t>& point_order,
              const std::vector<std::size_t>& open_order);

}  // namespace gts
