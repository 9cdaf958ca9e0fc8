#pragma once

#include <compare>
#include <cstdint>

namespace omt {

/// Index of an element in its owning lattice (declaration order).
struct Element {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

/// Index of a time point in its owning time set (declaration order).
struct TimePoint {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(TimePoint, TimePoint) = default;
};

}  // namespace omt
