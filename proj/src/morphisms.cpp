#include "gts/morphisms.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

namespace gts {
namespace {

void check_totality(const Space& source, const Space& target, const std::vector<std::size_t>& f,
                    const std::vector<std::size_t>& f_bar) {
  if (f.size() != source.point_count())
    throw Error(ErrorKind::dimension_mismatch,
                "point map has " + std::to_string(f.size()) + " entries for " +
                    std::to_string(source.point_count()) + " source points");
  if (f_bar.size() != target.open_count())
    throw Error(ErrorKind::dimension_mismatch,
                "open map has " + std::to_string(f_bar.size()) + " entries for " +
                    std::to_string(target.open_count()) + " target opens");
  for (std::size_t v : f)
    if (v >= target.point_count())
      throw Error(ErrorKind::index_out_of_range,
                  "point map value " + std::to_string(v) + " is not a target point");
  for (std::size_t v : f_bar)
    if (v >= source.open_count())
      throw Error(ErrorKind::index_out_of_range,
                  "open map value " + std::to_string(v) + " is not a source open");
}

std::vector<Degree> sorted_row(const Space& s, std::size_t x) {
  auto r = s.row(x);
  std::vector<Degree> row(r.begin(), r.end());
  std::sort(row.begin(), row.end());
  return row;
}

std::vector<Degree> sorted_column(const Space& s, std::size_t j) {
  auto col = s.column(j);
  std::sort(col.begin(), col.end());
  return col;
}

}  // namespace

ContinuousMap check_continuous(const Space& source, const Space& target,
                               std::vector<std::size_t> f, std::vector<std::size_t> f_bar) {
  check_totality(source, target, f, f_bar);
  for (std::size_t x = 0; x < source.point_count(); ++x)
    for (std::size_t b = 0; b < target.open_count(); ++b)
      if (target.at(f[x], b) != source.at(x, f_bar[b]))
        throw Error::adjointness(x, b,
                                 "adjointness fails at point " + source.point_label(x) +
                                     " and open " + target.open_label(b));
  return ContinuousMap{&source, &target, std::move(f), std::move(f_bar)};
}

std::vector<ContinuousMap> enumerate_continuous(const Space& source, const Space& target,
                                                std::size_t cap) {
  const std::size_t n = source.point_count();
  const std::size_t nt = target.point_count();
  const std::size_t mt = target.open_count();
  auto total = checked_pow(nt, n);
  if (!total || *total > cap)
    throw Error(ErrorKind::search_space_too_large,
                "candidate point maps exceed cap " + std::to_string(cap));

  std::vector<std::vector<ContinuousMap>> found(*total);
  par_for(*total, [&](std::size_t c) {
    std::vector<std::size_t> f(n);
    std::size_t rest = c;
    for (std::size_t i = n; i-- > 0;) {
      f[i] = rest % nt;
      rest /= nt;
    }

    // per target open: every source open whose column equals the pullback
    std::vector<std::vector<std::size_t>> choices(mt);
    for (std::size_t b = 0; b < mt; ++b) {
      for (std::size_t a = 0; a < source.open_count(); ++a) {
        bool equal = true;
        for (std::size_t x = 0; x < n && equal; ++x)
          equal = source.at(x, a) == target.at(f[x], b);
        if (equal) choices[b].push_back(a);
      }
      if (choices[b].empty()) return;
    }

    std::vector<std::size_t> pick(mt, 0);
    for (;;) {
      std::vector<std::size_t> f_bar(mt);
      for (std::size_t b = 0; b < mt; ++b) f_bar[b] = choices[b][pick[b]];
      found[c].push_back(ContinuousMap{&source, &target, f, std::move(f_bar)});
      std::size_t b = mt;
      while (b-- > 0) {
        if (++pick[b] < choices[b].size()) break;
        pick[b] = 0;
      }
      if (b == std::numeric_limits<std::size_t>::max()) break;
    }
  });

  std::vector<ContinuousMap> out;
  for (auto& per : found)
    for (auto& m : per) out.push_back(std::move(m));
  return out;
}

std::optional<Isomorphism> find_isomorphism(const Space& a, const Space& b) {
  const std::size_t n = a.point_count();
  const std::size_t m = a.open_count();
  if (b.point_count() != n || b.open_count() != m) return std::nullopt;

  std::vector<std::vector<Degree>> rows_a(n), rows_b(n);
  for (std::size_t x = 0; x < n; ++x) {
    rows_a[x] = sorted_row(a, x);
    rows_b[x] = sorted_row(b, x);
  }
  {
    auto ra = rows_a, rb = rows_b;
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    if (ra != rb) return std::nullopt;
    std::vector<std::vector<Degree>> ca(m), cb(m);
    for (std::size_t j = 0; j < m; ++j) {
      ca[j] = sorted_column(a, j);
      cb[j] = sorted_column(b, j);
    }
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
  }

  std::vector<std::vector<std::size_t>> cand(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (rows_a[x] == rows_b[y]) cand[x].push_back(y);

  std::vector<std::size_t> f(n, 0);
  std::vector<bool> used(n, false);

  // columns restricted to the first k points must agree as multisets; a
  // full isomorphism matches columns exactly, so every prefix must too
  auto prefix_ok = [&](std::size_t k) {
    std::vector<std::vector<Degree>> pa(m), pb(m);
    for (std::size_t j = 0; j < m; ++j) {
      pa[j].reserve(k);
      pb[j].reserve(k);
      for (std::size_t x = 0; x < k; ++x) {
        pa[j].push_back(a.at(x, j));
        pb[j].push_back(b.at(f[x], j));
      }
    }
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    return pa == pb;
  };

  std::vector<std::size_t> f_bar(m, 0);
  auto match_opens = [&]() {
    std::map<std::vector<Degree>, std::vector<std::size_t>> classes;
    for (std::size_t j = 0; j < m; ++j) classes[a.column(j)].push_back(j);
    std::map<std::vector<Degree>, std::size_t> cursor;
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Degree> pull;
      pull.reserve(n);
      for (std::size_t x = 0; x < n; ++x) pull.push_back(b.at(f[x], j));
      auto it = classes.find(pull);
      if (it == classes.end()) return false;
      std::size_t& next = cursor[it->first];
      if (next >= it->second.size()) return false;
      f_bar[j] = it->second[next++];
    }
    return true;
  };

  auto dfs = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return match_opens();
    for (std::size_t y : cand[k]) {
      if (used[y]) continue;
      f[k] = y;
      used[y] = true;
      if (prefix_ok(k + 1) && self(self, k + 1)) return true;
      used[y] = false;
    }
    return false;
  };

  if (!dfs(dfs, 0)) return std::nullopt;
  return Isomorphism{ContinuousMap{&a, &b, std::move(f), std::move(f_bar)}};
}

ContinuousMap induced_closed_map(const ContinuousMap& m, const ClosedLink& link_source,
                                 const ClosedLink& link_target) {
  if (!m.source || !m.target)
    throw Error(ErrorKind::link_mismatch, "map lacks a source or target space");
  if (!link_source.open_space.same_presentation(*m.source))
    throw Error(ErrorKind::link_mismatch, "source link is over a different space");
  if (!link_target.open_space.same_presentation(*m.target))
    throw Error(ErrorKind::link_mismatch, "target link is over a different space");

  std::vector<std::size_t> f_bar_star(link_target.closed_space.open_count());
  for (std::size_t l = 0; l < f_bar_star.size(); ++l)
    f_bar_star[l] = link_source.phi[m.f_bar[link_target.phi_inv[l]]];
  return check_continuous(link_source.closed_space, link_target.closed_space, m.f,
                          std::move(f_bar_star));
}

}  // namespace gts
