#pragma once

// Admissible remaining-cost estimate for ordered multipoint trajectories,
// built from exact one-dimensional costs between turning points.

#include <optional>
#include <span>
#include <vector>

#include "vtsp/kinematics.hpp"

namespace vtsp {

// Vectors needed to cover d >= 0 units in one dimension, at rest at both
// ends: ceil(2 sqrt(d)), computed as the least m with m^2 >= 4d.
Coord unidim_cost(Coord d);

struct Leg {
  Coord from = 0;
  Coord to = 0;
  Coord length() const { return to > from ? to - from : from - to; }
  friend bool operator==(const Leg&, const Leg&) = default;
};

// Maximal monotone runs of a projected coordinate sequence. Consecutive legs
// alternate direction and none is empty.
struct TurningPlan {
  std::vector<Leg> legs;
  std::vector<Coord> distances() const;
};

TurningPlan turning_points(Coord start, std::span<const Coord> projected);

struct LegCost {
  Coord cost = 0;
  // Coordinate, at rest, from which the following leg is costed.
  Coord carry = 0;
};

// Lower bound on the 1D cost of the leg from (x, dx) to p, ending at rest at
// p. When the vehicle cannot avoid overshooting a non-final turning point,
// the returned carry is where it stops and the next leg starts from there.
// p_next is required when !is_final.
LegCost leg_cost_from(Coord x, Coord dx, Coord p, bool is_final,
                      std::optional<Coord> p_next = std::nullopt);

// One-dimensional bound from (x, dx) over the projected suffix, whose last
// entry is the final rest position.
Coord dimension_estimate(Coord x, Coord dx, std::span<const Coord> projected);

// Lower bound on the vectors still needed from `c` to visit `suffix` in order
// and come to rest on its last entry. Maximum over dimensions.
//
// For alpha > 0 the turning points are no longer forced exactly, so only the
// final rest leg is counted.
Coord estimate_remaining(const Configuration& c, std::span<const Position> suffix,
                         const VisitParams& params);

}  // namespace vtsp
