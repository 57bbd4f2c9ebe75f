#include "gts/space.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace gts {

const char* to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::open_space: return "open";
    case SpaceKind::closed_space: return "closed";
    case SpaceKind::dual_space: return "dual";
    case SpaceKind::derived: return "derived";
  }
  return "?";
}

std::optional<SpaceKind> space_kind_from_string(std::string_view name) {
  if (name == "open") return SpaceKind::open_space;
  if (name == "closed") return SpaceKind::closed_space;
  if (name == "dual") return SpaceKind::dual_space;
  if (name == "derived") return SpaceKind::derived;
  return std::nullopt;
}

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  for (char c : label) {
    auto u = static_cast<unsigned char>(c);
    if (std::isspace(u) || std::iscntrl(u)) return false;
    if (c == ':' || c == '#') return false;
  }
  return true;
}

namespace {

void validate_labels(const std::vector<std::string>& labels, const char* what) {
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (!is_valid_label(label))
      throw Error(ErrorKind::invalid_label,
                  std::string(what) + " label '" + label + "' is empty or contains "
                  "whitespace, ':' or '#'");
    if (!seen.insert(label).second)
      throw Error(ErrorKind::duplicate_label,
                  std::string("duplicate ") + what + " label '" + label + "'");
  }
}

}  // namespace

Space::Space(std::vector<std::string> point_labels, std::vector<std::string> open_labels,
             std::vector<std::vector<Degree>> rows, SpaceKind kind)
    : points_(std::move(point_labels)), opens_(std::move(open_labels)), kind_(kind) {
  if (rows.size() != points_.size())
    throw Error(ErrorKind::dimension_mismatch,
                "matrix has " + std::to_string(rows.size()) + " rows for " +
                    std::to_string(points_.size()) + " points");
  cells_.reserve(points_.size() * opens_.size());
  for (const auto& row : rows) {
    if (row.size() != opens_.size())
      throw Error(ErrorKind::dimension_mismatch,
                  "matrix row has " + std::to_string(row.size()) + " entries for " +
                      std::to_string(opens_.size()) + " opens");
    cells_.insert(cells_.end(), row.begin(), row.end());
  }
  validate();
}

Space::Space(std::vector<std::string> point_labels, std::vector<std::string> open_labels,
             std::vector<Degree> cells, SpaceKind kind)
    : points_(std::move(point_labels)),
      opens_(std::move(open_labels)),
      cells_(std::move(cells)),
      kind_(kind) {
  if (cells_.size() != points_.size() * opens_.size())
    throw Error(ErrorKind::dimension_mismatch,
                "flat matrix size " + std::to_string(cells_.size()) + " != " +
                    std::to_string(points_.size()) + " x " + std::to_string(opens_.size()));
  validate();
}

void Space::validate() const {
  validate_labels(points_, "point");
  validate_labels(opens_, "open");
}

std::optional<std::size_t> Space::point_index(std::string_view label) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == label) return i;
  return std::nullopt;
}

std::optional<std::size_t> Space::open_index(std::string_view label) const {
  for (std::size_t j = 0; j < opens_.size(); ++j)
    if (opens_[j] == label) return j;
  return std::nullopt;
}

std::vector<Degree> Space::column(std::size_t open) const {
  std::vector<Degree> col;
  col.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) col.push_back(at(i, open));
  return col;
}

Space Space::with_kind(SpaceKind kind) const {
  Space copy = *this;
  copy.kind_ = kind;
  return copy;
}

bool Space::same_presentation(const Space& other) const {
  return points_ == other.points_ && opens_ == other.opens_ && cells_ == other.cells_;
}

const Degree& degree(const Space& space, std::size_t point, std::size_t open) {
  if (point >= space.point_count())
    throw Error(ErrorKind::index_out_of_range,
                "point index " + std::to_string(point) + " >= " +
                    std::to_string(space.point_count()));
  if (open >= space.open_count())
    throw Error(ErrorKind::index_out_of_range,
                "open index " + std::to_string(open) + " >= " +
                    std::to_string(space.open_count()));
  return space.at(point, open);
}

SetRef set_ref(const Space& space, std::size_t index) {
  if (index >= space.open_count())
    throw Error(ErrorKind::index_out_of_range,
                "set index " + std::to_string(index) + " out of range");
  Polarity polarity = space.kind() == SpaceKind::closed_space ? Polarity::closed_set
                                                              : Polarity::open_set;
  return SetRef{&space, index, polarity};
}

OpenFamily::OpenFamily(const Space& space_in, std::vector<std::size_t> indices_in)
    : space(&space_in), indices(std::move(indices_in)) {
  if (indices.empty())
    throw Error(ErrorKind::empty_family, "open family must be nonempty");
  for (std::size_t idx : indices)
    if (idx >= space->open_count())
      throw Error(ErrorKind::index_out_of_range,
                  "family member " + std::to_string(idx) + " out of range");
}

namespace {

void check_permutation(const std::vector<std::size_t>& order, std::size_t n, const char* what) {
  if (order.size() != n)
    throw Error(ErrorKind::not_a_permutation,
                std::string(what) + " permutation has length " + std::to_string(order.size()) +
                    ", expected " + std::to_string(n));
  std::vector<bool> seen(n, false);
  for (std::size_t v : order) {
    if (v >= n || seen[v])
      throw Error(ErrorKind::not_a_permutation,
                  std::string(what) + " permutation is not a bijection on 0.." +
                      std::to_string(n ? n - 1 : 0));
    seen[v] = true;
  }
}

}  // namespace

Space relabel(const Space& space, const std::vector<std::size_t>& point_order,
              const std::vector<std::size_t>& open_order) {
  check_permutation(point_order, space.point_count(), "point");
  check_permutation(open_order, space.open_count(), "open");
  std::vector<std::string> points(space.point_count());
  std::vector<std::string> opens(space.open_count());
  for (std::size_t i = 0; i < point_order.size(); ++i)
    points[i] = space.point_label(point_order[i]);
  for (std::size_t j = 0; j < open_order.size(); ++j)
    opens[j] = space.open_label(open_order[j]);
  std::vector<Degree> cells;
  cells.reserve(space.point_count() * space.open_count());
  for (std::size_t i = 0; i < point_order.size(); ++i)
    for (std::size_t j = 0; j < open_order.size(); ++j)
      cells.push_back(space.at(point_order[i], open_order[j]));
  return Space(std::move(points), std::move(opens), std::move(cells), space.kind());
}

}  // namespace gts
