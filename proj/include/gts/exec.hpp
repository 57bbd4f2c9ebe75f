#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace gts {

/// Runtime switch between the serial and the OpenMP execution of the
/// data-parallel kernels. Both modes produce bit-identical results; the
/// serial mode doubles as the baseline for gts-bench and for the
/// equivalence tests.
enum class ExecMode { serial, parallel };

ExecMode exec_mode();
void set_exec_mode(ExecMode mode);

/// Scoped override, for tests.
class ScopedExecMode {
public:
  explicit ScopedExecMode(ExecMode mode) : previous_(exec_mode()) { set_exec_mode(mode); }
  ~ScopedExecMode() { set_exec_mode(previous_); }
  ScopedExecMode(const ScopedExecMode&) = delete;
  ScopedExecMode& operator=(const ScopedExecMode&) = delete;

private:
  ExecMode previous_;
};

namespace detail {

void par_for_impl(std::int64_t n, void (*body)(std::int64_t, void*), void* ctx, bool parallel);

}  // namespace detail

/// Runs body(0..n-1). Iterations must write disjoint state; the loop runs
/// under OpenMP when the mode is `parallel` and the library was built with
/// OpenMP, and as a plain loop otherwise.
template <typename Fn>
void par_for(std::size_t n, Fn&& body) {
  auto thunk = [](std::int64_t i, void* ctx) { (*static_cast<Fn*>(ctx))(static_cast<std::size_t>(i)); };
  detail::par_for_impl(static_cast<std::int64_t>(n), thunk, &body,
                       exec_mode() == ExecMode::parallel);
}

/// Default cap for exponential carriers and enumerations; reads
/// GTS_DEFAULT_CAP from the environment, falling back to 1e6.
std::uint64_t default_cap();

/// base^exp, or nullopt on overflow (callers treat overflow as over-cap).
std::optional<std::size_t> checked_pow(std::size_t base, std::size_t exp);

}  // namespace gts
