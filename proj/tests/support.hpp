#pragma once

#include <optional>
#include <utility>

#include "gts/degree.hpp"
#include "gts/error.hpp"

namespace support {

// runs fn and hands back the library error it threw, if any
template <typename Fn>
std::optional<gts::Error> capture(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const gts::Error& e) {
    return e;
  }
  return std::nullopt;
}

inline gts::Degree d(long long num, long long den = 1) { return gts::Degree(num, den); }

}  // namespace support
