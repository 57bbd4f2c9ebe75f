#include "gts/exec.hpp"

#include <atomic>
#include <cstdlib>
#include <limits>
#include <string>

namespace gts {

namespace {

std::atomic<ExecMode> g_mode{ExecMode::parallel};

}  // namespace

ExecMode exec_mode() { return g_mode.load(std::memory_order_relaxed); }

void set_exec_mode(ExecMode mode) { g_mode.store(mode, std::memory_order_relaxed); }

namespace detail {

void par_for_impl(std::int64_t n, void (*body)(std::int64_t, void*), void* ctx, bool parallel) {
#ifdef _OPENMP
  if (parallel && n > 1) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) body(i, ctx);
    return;
  }
#else
  (void)parallel;
#endif
  for (std::int64_t i = 0; i < n; ++i) body(i, ctx);
}

}  // namespace detail

std::uint64_t default_cap() {
  if (const char* env = std::getenv("GTS_DEFAULT_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
  }
  return 1'000'000;
}

std::optional<std::size_t> checked_pow(std::size_t base, std::size_t exp) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::size_t>::max() / base)
      return std::nullopt;
    result *= base;
  }
  return result;
}

}  // namespace gts
