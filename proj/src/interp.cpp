#include "gts/interp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gts/connectives.hpp"

namespace gts {
namespace {

std::vector<std::size_t> label_indices(const std::vector<std::string>& points,
                                       const std::vector<std::string>& members) {
  std::vector<std::size_t> idx;
  idx.reserve(members.size());
  for (const auto& m : members) {
    auto it = std::find(points.begin(), points.end(), m);
    if (it == points.end())
      throw Error(ErrorKind::unknown_point_label, "unknown point label '" + m + "'");
    idx.push_back(static_cast<std::size_t>(it - points.begin()));
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

bool is_classical(const Space& s) {
  for (std::size_t x = 0; x < s.point_count(); ++x)
    for (std::size_t j = 0; j < s.open_count(); ++j)
      if (!s.at(x, j).is_zero() && !s.at(x, j).is_one()) return false;
  return true;
}

// independent of the connective builders on purpose: the comprehension
// checks re-derive the function graphs from scratch
std::vector<std::size_t> decode_graph(std::size_t c, std::size_t domain, std::size_t base) {
  std::vector<std::size_t> graph(domain);
  for (std::size_t i = domain; i-- > 0;) {
    graph[i] = c % base;
    c /= base;
  }
  return graph;
}

}  // namespace

ClassicalImport from_classical(const ClassicalTopology& t) {
  const std::size_t n = t.points.size();
  std::vector<std::vector<bool>> subsets;
  std::vector<std::string> open_labels;
  subsets.reserve(t.opens.size());
  open_labels.reserve(t.opens.size());
  for (const auto& members : t.opens) {
    auto idx = label_indices(t.points, members);
    std::vector<bool> bits(n, false);
    std::string label = "{";
    for (std::size_t k = 0; k < idx.size(); ++k) {
      bits[idx[k]] = true;
      if (k) label += ',';
      label += t.points[idx[k]];
    }
    label += '}';
    subsets.push_back(std::move(bits));
    open_labels.push_back(std::move(label));
  }

  std::vector<Degree> cells(n * subsets.size());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t j = 0; j < subsets.size(); ++j)
      cells[x * subsets.size() + j] = subsets[j][x] ? Degree::one() : Degree::zero();

  ClassicalImport out{
      Space(t.points, std::move(open_labels), std::move(cells), SpaceKind::open_space),
      false, false, true, true, false};

  std::set<std::vector<bool>> family(subsets.begin(), subsets.end());
  const std::vector<bool> empty(n, false);
  const std::vector<bool> full(n, true);
  out.has_empty = family.count(empty) > 0;
  out.has_full = family.count(full) > 0;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i; j < subsets.size(); ++j) {
      std::vector<bool> both(n), either(n);
      for (std::size_t x = 0; x < n; ++x) {
        both[x] = subsets[i][x] && subsets[j][x];
        either[x] = subsets[i][x] || subsets[j][x];
      }
      if (!family.count(both)) out.intersection_closed = false;
      if (!family.count(either)) out.union_closed = false;
    }
  out.sgts = out.intersection_closed && out.union_closed;
  return out;
}

FuzzyImport from_fuzzy(const std::vector<std::string>& points,
                       const std::vector<FuzzySet>& sets) {
  std::vector<Degree> cells(points.size() * sets.size());
  for (std::size_t j = 0; j < sets.size(); ++j) {
    for (const auto& [label, value] : sets[j].membership) {
      (void)value;
      if (std::find(points.begin(), points.end(), label) == points.end())
        throw Error(ErrorKind::unknown_point_label,
                    "fuzzy set " + std::to_string(j) + " mentions unknown point '" + label + "'");
    }
    for (std::size_t x = 0; x < points.size(); ++x) {
      auto it = sets[j].membership.find(points[x]);
      if (it == sets[j].membership.end())
        throw Error(ErrorKind::unknown_point_label,
                    "fuzzy set " + std::to_string(j) + " lacks point '" + points[x] + "'");
      cells[x * sets.size() + j] = it->second;
    }
  }

  std::vector<std::string> labels(sets.size());
  for (std::size_t j = 0; j < sets.size(); ++j) labels[j] = "F" + std::to_string(j);

  FuzzyImport out{Space(points, std::move(labels), std::move(cells), SpaceKind::open_space),
                  false, false};
  for (std::size_t j = 0; j < sets.size(); ++j) {
    bool all0 = true, all1 = true;
    for (std::size_t x = 0; x < points.size(); ++x) {
      const Degree& d = out.space.at(x, j);
      all0 = all0 && d.is_zero();
      all1 = all1 && d.is_one();
    }
    out.has_bottom = out.has_bottom || all0;
    out.has_top = out.has_top || all1;
  }
  return out;
}

Subbase pointwise_subbase(const Space& a, const Space& b, std::size_t cap) {
  Space l = limp(a, b, cap);
  Subbase out;
  out.carrier = l.point_labels();
  out.generators.reserve(l.open_count());
  for (std::size_t j = 0; j < l.open_count(); ++j)
    out.generators.push_back({l.open_label(j), l.column(j)});

  if (is_classical(a) && is_classical(b)) {
    const std::size_t na = a.point_count();
    for (std::size_t c = 0; c < l.point_count(); ++c) {
      auto graph = decode_graph(c, na, b.point_count());
      for (std::size_t x = 0; x < na; ++x)
        for (std::size_t jb = 0; jb < b.open_count(); ++jb) {
          bool member = b.at(graph[x], jb).is_one();
          if (out.generators[x * b.open_count() + jb].membership[c] !=
              (member ? Degree::one() : Degree::zero()))
            throw std::logic_error("pointwise subbase diverged from the set comprehension");
        }
    }
  }
  return out;
}

Subbase tensor_subbase(const Space& a, const Space& b, std::size_t cap) {
  Space t = tensor(a, b, cap);
  Subbase out;
  out.carrier = t.point_labels();
  out.generators.reserve(t.open_count());
  for (std::size_t j = 0; j < t.open_count(); ++j)
    out.generators.push_back({t.open_label(j), t.column(j)});

  if (is_classical(a) && is_classical(b)) {
    const std::size_t nb = b.point_count();
    for (std::size_t c = 0; c < t.open_count(); ++c) {
      auto graph = decode_graph(c, a.point_count(), b.open_count());
      const auto& got = out.generators[c].membership;
      for (std::size_t x = 0; x < a.point_count(); ++x)
        for (std::size_t y = 0; y < nb; ++y) {
          bool member = b.at(y, graph[x]).is_one();
          if (got[x * nb + y] != (member ? Degree::one() : Degree::zero()))
            throw std::logic_error("tensor subbase diverged from the set comprehension");
        }
    }
  }
  return out;
}

std::optional<ClassicalTopology> export_classical(const Space& space) {
  if (!is_classical(space)) return std::nullopt;
  ClassicalTopology t;
  t.points = space.point_labels();
  t.opens.reserve(space.open_count());
  for (std::size_t j = 0; j < space.open_count(); ++j) {
    std::vector<std::string> members;
    for (std::size_t x = 0; x < space.point_count(); ++x)
      if (space.at(x, j).is_one()) members.push_back(space.point_label(x));
    t.opens.push_back(std::move(members));
  }
  return t;
}

Space close_under_min_max(const Space& space, std::size_t cap) {
  const std::size_t n = space.point_count();

  // degrees interned as ranks: order-isomorphic, so pointwise min/max of
  // columns becomes integer min/max and the worklist never touches a
  // rational again until the final matrix is rebuilt
  std::vector<Degree> values;
  values.reserve(n * space.open_count());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t j = 0; j < space.open_count(); ++j) values.push_back(space.at(x, j));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  auto rank_of = [&](const Degree& d) {
    return static_cast<std::size_t>(
        std::lower_bound(values.begin(), values.end(), d) - values.begin());
  };

  std::vector<std::vector<std::size_t>> cols;
  std::vector<std::string> labels = space.open_labels();
  cols.reserve(space.open_count());
  for (std::size_t j = 0; j < space.open_count(); ++j) {
    std::vector<std::size_t> col(n);
    for (std::size_t x = 0; x < n; ++x) col[x] = rank_of(space.at(x, j));
    cols.push_back(std::move(col));
  }
  std::set<std::vector<std::size_t>> present(cols.begin(), cols.end());

  std::size_t fresh = 0;
  auto adjoin = [&](std::vector<std::size_t> col) {
    if (present.count(col)) return;
    if (cols.size() >= cap)
      throw Error(ErrorKind::search_space_too_large,
                  "min/max closure exceeds cap " + std::to_string(cap));
    present.insert(col);
    labels.push_back("cl" + std::to_string(fresh++));
    cols.push_back(std::move(col));
  };

  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      std::vector<std::size_t> lo(n), hi(n);
      for (std::size_t x = 0; x < n; ++x) {
        lo[x] = std::min(cols[i][x], cols[j][x]);
        hi[x] = std::max(cols[i][x], cols[j][x]);
      }
      adjoin(std::move(lo));
      adjoin(std::move(hi));
    }

  std::vector<Degree> cells(n * cols.size());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t j = 0; j < cols.size(); ++j) cells[x * cols.size() + j] = values[cols[j][x]];
  return Space(space.point_labels(), std::move(labels), std::move(cells), SpaceKind::derived);
}

}  // namespace gts
