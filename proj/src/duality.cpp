#include "gts/duality.hpp"

#include <map>

#include "gts/exec.hpp"

namespace gts {

Space dual(const Space& space) {
  std::vector<Degree> cells(space.point_count() * space.open_count());
  // transposed: entry (A, x) = r(x, A)
  for (std::size_t j = 0; j < space.open_count(); ++j)
    for (std::size_t i = 0; i < space.point_count(); ++i)
      cells[j * space.point_count() + i] = space.at(i, j);
  return Space(space.open_labels(), space.point_labels(), std::move(cells),
               SpaceKind::dual_space);
}

ClosedLink closed_of(const Space& space, std::optional<std::vector<std::string>> closed_labels,
                     std::optional<std::vector<std::size_t>> phi) {
  const std::size_t n = space.open_count();
  std::vector<std::size_t> phi_map;
  if (phi) {
    phi_map = std::move(*phi);
    if (phi_map.size() != n)
      throw Error(ErrorKind::not_a_bijection,
                  "phi has " + std::to_string(phi_map.size()) + " entries for " +
                      std::to_string(n) + " opens");
    std::vector<bool> hit(n, false);
    for (std::size_t v : phi_map) {
      if (v >= n || hit[v])
        throw Error(ErrorKind::not_a_bijection, "phi is not a bijection on the open indices");
      hit[v] = true;
    }
  } else {
    phi_map.resize(n);
    for (std::size_t j = 0; j < n; ++j) phi_map[j] = j;
  }

  std::vector<std::size_t> phi_inv(n);
  for (std::size_t j = 0; j < n; ++j) phi_inv[phi_map[j]] = j;

  std::vector<std::string> labels;
  if (closed_labels) {
    labels = std::move(*closed_labels);
    if (labels.size() != n)
      throw Error(ErrorKind::dimension_mismatch,
                  "closed label list has " + std::to_string(labels.size()) +
                      " entries for " + std::to_string(n) + " closed sets");
  } else {
    labels.resize(n);
    for (std::size_t j = 0; j < n; ++j) labels[phi_map[j]] = space.open_label(j) + "^c";
  }

  std::vector<Degree> cells(space.point_count() * n);
  for (std::size_t x = 0; x < space.point_count(); ++x)
    for (std::size_t k = 0; k < n; ++k)
      cells[x * n + k] = space.at(x, phi_inv[k]).complement();

  ClosedLink link{space,
                  Space(space.point_labels(), std::move(labels), std::move(cells),
                        SpaceKind::closed_space),
                  std::move(phi_map), std::move(phi_inv)};
  return link;
}

std::optional<ScgtsEntry> ScgtsReport::first_failure() const {
  for (const auto& entry : entries)
    if (!entry.witness) return entry;
  return std::nullopt;
}

ScgtsReport verify_scgts(const ClosedLink& link) {
  const Space& closed = link.closed_space;
  const std::size_t n = closed.open_count();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) pairs.emplace_back(i, j);

  ScgtsReport report;
  report.note =
      "binary max and min witnesses; finite families follow by induction on the pair case";
  report.entries.resize(pairs.size() * 2);

  // least column index per distinct column, so the witness lookup inside
  // the pair loop is a single map probe instead of a full column scan
  std::map<std::vector<Degree>, std::size_t> least_index;
  for (std::size_t j = 0; j < n; ++j) least_index.emplace(closed.column(j), j);
  auto witness_for = [&](const std::vector<Degree>& col) -> std::optional<std::size_t> {
    auto it = least_index.find(col);
    if (it == least_index.end()) return std::nullopt;
    return it->second;
  };

  par_for(pairs.size(), [&](std::size_t p) {
    auto [i, j] = pairs[p];
    std::vector<Degree> lo, hi;
    lo.reserve(closed.point_count());
    hi.reserve(closed.point_count());
    for (std::size_t x = 0; x < closed.point_count(); ++x) {
      lo.push_back(min(closed.at(x, i), closed.at(x, j)));
      hi.push_back(max(closed.at(x, i), closed.at(x, j)));
    }
    report.entries[2 * p] = ScgtsEntry{i, j, true, witness_for(hi)};
    report.entries[2 * p + 1] = ScgtsEntry{i, j, false, witness_for(lo)};
  });

  for (const auto& entry : report.entries)
    if (!entry.witness) report.passes = false;
  return report;
}

bool closed_subspace_check(const ClosedLink& link_super, const ClosedLink& link_sub,
                           const SubspaceWitness& witness) {
  const Space& super = link_super.open_space;
  const Space& sub = link_sub.open_space;
  if (witness.point_embedding.size() != sub.point_count() ||
      witness.nu.size() != super.open_count())
    throw Error(ErrorKind::incompatible_witness,
                "witness dimensions do not match the linked spaces");
  for (std::size_t y = 0; y < sub.point_count(); ++y) {
    std::size_t x = witness.point_embedding[y];
    if (x >= super.point_count() || super.point_label(x) != sub.point_label(y))
      throw Error(ErrorKind::incompatible_witness,
                  "point embedding does not match the sub point labels");
  }
  for (std::size_t v : witness.nu)
    if (v >= sub.open_count())
      throw Error(ErrorKind::incompatible_witness, "nu target out of range");

  // nu-bar(K) = phi2(nu(phi1^-1(K))) must be a surjection with
  // r-bar(y, K) = s-bar(y, nu-bar(K)) on the embedded points.
  const Space& closed_super = link_super.closed_space;
  const Space& closed_sub = link_sub.closed_space;
  std::vector<bool> hit(closed_sub.open_count(), false);
  for (std::size_t k = 0; k < closed_super.open_count(); ++k) {
    std::size_t l = link_sub.phi[witness.nu[link_super.phi_inv[k]]];
    hit[l] = true;
    for (std::size_t y = 0; y < sub.point_count(); ++y)
      if (closed_super.at(witness.point_embedding[y], k) != closed_sub.at(y, l)) return false;
  }
  for (bool h : hit)
    if (!h) return false;
  return true;
}

}  // namespace gts
