#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vtsp/kinematics.hpp"

namespace vtsp {

// A closed visit order over city indices: order.front() == order.back() ==
// the instance start, interior entries a permutation of the other cities.
struct Tour {
  std::vector<std::size_t> order;

  // Builds start, interior..., start.
  static Tour closed(std::size_t start, std::span<const std::size_t> interior);

  // Throws InvalidArgument if the tour violates its invariants for `inst`.
  void validate(const Instance& inst) const;

  // Cities strictly between the two occurrences of the start.
  std::vector<Position> interior_cities(const Instance& inst) const;

  double euclidean_length(const Instance& inst) const;

  friend bool operator==(const Tour&, const Tour&) = default;
};

}  // namespace vtsp
