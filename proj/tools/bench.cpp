// Times the data-parallel kernels against their plain-loop baselines, in
// both execution modes. The baselines are the same functions the test
// suite uses as equivalence oracles.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "gts/connectives.hpp"
#include "gts/duality.hpp"
#include "gts/exec.hpp"
#include "gts/interp.hpp"
#include "gts/morphisms.hpp"
#include "gts/properties.hpp"
#include "gts/reference.hpp"

using gts::ExecMode;
using gts::ScopedExecMode;
using gts::Space;

namespace {

double ms_once(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

void row(const char* name, const std::function<void()>& baseline,
         const std::function<void()>& kernel) {
  double base = ms_once(baseline);
  double serial, parallel;
  {
    ScopedExecMode mode(ExecMode::serial);
    serial = ms_once(kernel);
  }
  {
    ScopedExecMode mode(ExecMode::parallel);
    parallel = ms_once(kernel);
  }
  std::printf("%-22s %10.2f %10.2f %10.2f\n", name, base, serial, parallel);
}

Space random_space(std::mt19937_64& rng, std::size_t points, std::size_t opens) {
  static const std::vector<gts::Degree> pool = {
      gts::Degree::zero(), gts::Degree(1, 4), gts::Degree(1, 3), gts::Degree(1, 2),
      gts::Degree(2, 3),   gts::Degree(3, 4), gts::Degree::one()};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<std::string> ps, os;
  for (std::size_t i = 0; i < points; ++i) ps.push_back("p" + std::to_string(i));
  for (std::size_t j = 0; j < opens; ++j) os.push_back("O" + std::to_string(j));
  std::vector<gts::Degree> cells(points * opens);
  for (auto& d : cells) d = pool[pick(rng)];
  return Space(std::move(ps), std::move(os), std::move(cells), gts::SpaceKind::open_space);
}

}  // namespace

// separable space whose least witnesses sit late in the open order, so the
// pair scan does full work instead of exiting on a failing first pair
Space slow_hausdorff(std::size_t points, std::size_t blinds) {
  std::vector<std::string> ps, os;
  std::vector<gts::Degree> cells;
  for (std::size_t i = 0; i < points; ++i) ps.push_back("p" + std::to_string(i));
  for (std::size_t j = 0; j < blinds; ++j) os.push_back("A" + std::to_string(j));
  for (std::size_t j = 0; j < points; ++j) os.push_back("s" + std::to_string(j));
  for (std::size_t x = 0; x < points; ++x) {
    for (std::size_t j = 0; j < blinds; ++j) cells.push_back(gts::Degree::one());
    for (std::size_t j = 0; j < points; ++j)
      cells.push_back(j == x ? gts::Degree::one() : gts::Degree::zero());
  }
  return Space(std::move(ps), std::move(os), std::move(cells), gts::SpaceKind::open_space);
}

int main() {
  std::mt19937_64 rng(7);
  Space small = random_space(rng, 4, 5);
  Space wide = random_space(rng, 7, 6);
  Space tall = slow_hausdorff(30, 10);

  // a min/max closure with a triple-digit open count for the pair table
  gts::ClosedLink link = [&] {
    for (std::uint64_t seed = 0;; ++seed) {
      std::mt19937_64 r(seed);
      Space closed = gts::close_under_min_max(random_space(r, 4, 6), 4096);
      if (closed.open_count() >= 80) return gts::closed_of(closed);
    }
  }();

  std::printf("%-22s %10s %10s %10s\n", "kernel", "baseline", "serial", "parallel");
  std::printf("%-22s %10s %10s %10s\n", "", "(ms)", "(ms)", "(ms)");

  row(
      "limp 4x5 -> 7x6", [&] { gts::reference::limp_serial(small, wide); },
      [&] { gts::limp(small, wide); });
  row(
      "tensor+crosscheck", [&] { gts::reference::tensor_serial(small, wide); },
      [&] { gts::tensor(small, wide); });
  {
    char name[64];
    std::snprintf(name, sizeof name, "scgts %zu opens", link.closed_space.open_count());
    row(
        name, [&] { gts::reference::verify_scgts_serial(link); },
        [&] { gts::verify_scgts(link); });
  }
  row(
      "hausdorff 30 pts", [&] { gts::reference::check_hausdorff_serial(tall); },
      [&] { gts::check_hausdorff(tall); });
  row(
      "enumerate 4x5 -> 4x5",
      [&] { gts::reference::enumerate_continuous_serial(small, small); },
      [&] { gts::enumerate_continuous(small, small); });
  return 0;
}
