#pragma once

#include <cstdint>

#include "vtsp/errors.hpp"

namespace vtsp {

// floor(sqrt(v)) for v >= 0, exact.
constexpr std::int64_t isqrt(std::int64_t v) {
  if (v < 0) throw InvalidArgument("isqrt of a negative value");
  if (v < 2) return v;
  // Newton iteration on integers, starting above the root.
  std::int64_t x = v;
  std::int64_t y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + v / x) / 2;
  }
  return x;
}

// ceil(sqrt(v)) for v >= 0, exact.
constexpr std::int64_t ceil_sqrt(std::int64_t v) {
  const std::int64_t r = isqrt(v);
  return r * r == v ? r : r + 1;
}

}  // namespace vtsp
