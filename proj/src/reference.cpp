#include "gts/reference.hpp"

#include <limits>

#include "gts/connectives.hpp"
#include "gts/relations.hpp"

namespace gts::reference {
namespace {

std::vector<std::size_t> decode_graph(std::size_t c, std::size_t domain, std::size_t base) {
  std::vector<std::size_t> graph(domain);
  for (std::size_t i = domain; i-- > 0;) {
    graph[i] = c % base;
    c /= base;
  }
  return graph;
}

std::size_t carrier_size(std::size_t base, std::size_t exp, std::size_t cap) {
  auto total = checked_pow(base, exp);
  if (!total || *total > cap)
    throw Error(ErrorKind::search_space_too_large,
                "function carrier exceeds cap " + std::to_string(cap));
  return *total;
}

}  // namespace

Space limp_serial(const Space& a, const Space& b, std::size_t cap) {
  const std::size_t total = carrier_size(b.point_count(), a.point_count(), cap);
  std::vector<std::string> point_labels;
  std::vector<std::vector<Degree>> rows;
  point_labels.reserve(total);
  rows.reserve(total);
  for (std::size_t c = 0; c < total; ++c) {
    auto graph = decode_graph(c, a.point_count(), b.point_count());
    std::vector<Degree> row;
    row.reserve(a.point_count() * b.open_count());
    for (std::size_t x = 0; x < a.point_count(); ++x)
      for (std::size_t j = 0; j < b.open_count(); ++j) row.push_back(b.at(graph[x], j));
    point_labels.push_back(function_label(graph));
    rows.push_back(std::move(row));
  }

  std::vector<std::string> open_labels;
  open_labels.reserve(a.point_count() * b.open_count());
  for (std::size_t x = 0; x < a.point_count(); ++x)
    for (std::size_t j = 0; j < b.open_count(); ++j)
      open_labels.push_back(pair_label(a.point_label(x), b.open_label(j)));

  return Space(std::move(point_labels), std::move(open_labels), std::move(rows),
               SpaceKind::derived);
}

Space tensor_serial(const Space& a, const Space& b, std::size_t cap) {
  const std::size_t total = carrier_size(b.open_count(), a.point_count(), cap);
  std::vector<std::string> open_labels;
  open_labels.reserve(total);
  std::vector<std::vector<std::size_t>> graphs;
  graphs.reserve(total);
  for (std::size_t c = 0; c < total; ++c) {
    graphs.push_back(decode_graph(c, a.point_count(), b.open_count()));
    open_labels.push_back(function_label(graphs.back()));
  }

  std::vector<std::string> point_labels;
  std::vector<std::vector<Degree>> rows;
  point_labels.reserve(a.point_count() * b.point_count());
  rows.reserve(a.point_count() * b.point_count());
  for (std::size_t x = 0; x < a.point_count(); ++x)
    for (std::size_t y = 0; y < b.point_count(); ++y) {
      point_labels.push_back(pair_label(a.point_label(x), b.point_label(y)));
      std::vector<Degree> row;
      row.reserve(total);
      for (const auto& graph : graphs) row.push_back(b.at(y, graph[x]));
      rows.push_back(std::move(row));
    }

  return Space(std::move(point_labels), std::move(open_labels), std::move(rows),
               SpaceKind::derived);
}

ScgtsReport verify_scgts_serial(const ClosedLink& link) {
  const Space& closed = link.closed_space;
  ScgtsReport report;
  report.note =
      "binary max and min witnesses; finite families follow by induction on the pair case";
  for (std::size_t i = 0; i < closed.open_count(); ++i)
    for (std::size_t j = i; j < closed.open_count(); ++j) {
      std::vector<Degree> lo, hi;
      for (std::size_t x = 0; x < closed.point_count(); ++x) {
        lo.push_back(min(closed.at(x, i), closed.at(x, j)));
        hi.push_back(max(closed.at(x, i), closed.at(x, j)));
      }
      report.entries.push_back(ScgtsEntry{i, j, true, find_column(closed, hi)});
      report.entries.push_back(ScgtsEntry{i, j, false, find_column(closed, lo)});
    }
  for (const auto& entry : report.entries)
    if (!entry.witness) report.passes = false;
  return report;
}

PropertyReport check_hausdorff_serial(const Space& space) {
  PropertyReport report;
  report.property = PropertyName::hausdorff;
  const std::size_t n = space.point_count();
  if (n < 2) {
    report.note = "fewer than two points (vacuous)";
    return report;
  }
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = x1 + 1; x2 < n; ++x2) {
      HausdorffPair pair{x1, x2, std::nullopt};
      for (std::size_t a1 = 0; a1 < space.open_count() && !pair.opens; ++a1) {
        if (space.at(x1, a1).is_zero()) continue;
        for (std::size_t a2 = 0; a2 < space.open_count(); ++a2) {
          if (space.at(x2, a2).is_zero()) continue;
          bool disjoint = true;
          for (std::size_t x = 0; x < n && disjoint; ++x)
            disjoint = min(space.at(x, a1), space.at(x, a2)).is_zero();
          if (disjoint) {
            pair.opens = {a1, a2};
            break;
          }
        }
      }
      if (!pair.opens) {
        report.holds = false;
        report.note = "inseparable point pair";
        report.witnesses.assign(1, pair);
        return report;
      }
      report.witnesses.push_back(pair);
    }
  return report;
}

std::vector<ContinuousMap> enumerate_continuous_serial(const Space& source, const Space& target,
                                                       std::size_t cap) {
  const std::size_t total = carrier_size(target.point_count(), source.point_count(), cap);
  std::vector<ContinuousMap> out;
  for (std::size_t c = 0; c < total; ++c) {
    auto f = decode_graph(c, source.point_count(), target.point_count());

    std::vector<std::vector<std::size_t>> choices(target.open_count());
    bool viable = true;
    for (std::size_t b = 0; b < target.open_count() && viable; ++b) {
      for (std::size_t a = 0; a < source.open_count(); ++a) {
        bool equal = true;
        for (std::size_t x = 0; x < source.point_count() && equal; ++x)
          equal = source.at(x, a) == target.at(f[x], b);
        if (equal) choices[b].push_back(a);
      }
      viable = !choices[b].empty();
    }
    if (!viable) continue;

    std::vector<std::size_t> pick(target.open_count(), 0);
    for (;;) {
      std::vector<std::size_t> f_bar(target.open_count());
      for (std::size_t b = 0; b < target.open_count(); ++b) f_bar[b] = choices[b][pick[b]];
      out.push_back(ContinuousMap{&source, &target, f, std::move(f_bar)});
      std::size_t b = target.open_count();
      while (b-- > 0) {
        if (++pick[b] < choices[b].size()) break;
        pick[b] = 0;
      }
      if (b == std::numeric_limits<std::size_t>::max()) break;
    }
  }
  return out;
}

}  // namespace gts::reference
