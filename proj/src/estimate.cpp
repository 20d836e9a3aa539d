#include "vtsp/estimate.hpp"

#include <algorithm>
#include <cmath>

#include "vtsp/intmath.hpp"

namespace vtsp {

namespace {

// Appends the legs of the projected walk to `legs`.
void collect_legs(Coord start, std::span<const Coord> projected, std::vector<Leg>& legs) {
  legs.clear();
  Coord leg_start = start;
  Coord extreme = start;
  int dir = 0;
  for (Coord p : projected) {
    if (dir == 0) {
      if (p == leg_start) continue;
      dir = p > leg_start ? 1 : -1;
      extreme = p;
    } else if ((dir > 0 && p >= extreme) || (dir < 0 && p <= extreme)) {
      extreme = p;
    } else {
      legs.push_back({leg_start, extreme});
      leg_start = extreme;
      extreme = p;
      dir = -dir;
    }
  }
  if (dir != 0) legs.push_back({leg_start, extreme});
}

Coord abs_diff(Coord a, Coord b) { return a > b ? a - b : b - a; }

}  // namespace

Coord unidim_cost(Coord d) {
  if (d < 0) throw InvalidArgument("unidim_cost of a negative distance");
  const Coord v = 4 * d;
  if (v > (Coord(1) << 52)) return ceil_sqrt(v);
  // Floating estimate, then exact correction.
  Coord m = static_cast<Coord>(std::sqrt(static_cast<double>(v)));
  while (m * m < v) ++m;
  while (m > 0 && (m - 1) * (m - 1) >= v) --m;
  return m;
}

std::vector<Coord> TurningPlan::distances() const {
  std::vector<Coord> out;
  out.reserve(legs.size());
  for (const auto& leg : legs) out.push_back(leg.length());
  return out;
}

TurningPlan turning_points(Coord start, std::span<const Coord> projected) {
  TurningPlan plan;
  collect_legs(start, projected, plan.legs);
  return plan;
}

LegCost leg_cost_from(Coord x, Coord dx, Coord p, bool is_final, std::optional<Coord> p_next) {
  if (!is_final && !p_next) throw InvalidArgument("leg_cost_from: non-final leg needs p_next");
  // Orient so the leg runs towards +infinity; a zero-length leg is oriented
  // along the current velocity.
  const Coord s = p > x ? 1 : p < x ? -1 : dx < 0 ? -1 : 1;
  const Coord ox = s * x;
  const Coord ov = s * dx;
  const Coord op = s * p;

  if (ov < 0) {
    // Moving away: come to rest first, then a rest-to-rest leg.
    const Coord rest = ox - ov * (ov + 1) / 2;
    return {-ov + unidim_cost(op - rest), p};
  }
  const Coord stop = ox + ov * (ov - 1) / 2;
  if (stop > op) {
    // Overshoot even under full braking.
    if (is_final) return {ov + unidim_cost(stop - op), p};
    return {ov, s * stop};
  }
  // Reachable without overshoot: the vehicle is as if it had started at rest
  // ov(ov+1)/2 units behind, ov vectors earlier.
  const Coord virtual_start = ox - ov * (ov + 1) / 2;
  return {unidim_cost(op - virtual_start) - ov, p};
}

Coord dimension_estimate(Coord x, Coord dx, std::span<const Coord> projected) {
  if (projected.empty()) return 0;
  thread_local std::vector<Leg> legs;
  collect_legs(x, projected, legs);
  if (legs.empty()) {
    // Already on the rest coordinate; only the braking remains.
    return leg_cost_from(x, dx, x, true).cost;
  }
  const bool single = legs.size() == 1;
  const LegCost first =
      leg_cost_from(x, dx, legs[0].to, single, single ? std::nullopt : std::optional(legs[1].to));
  Coord total = first.cost;
  Coord from = first.carry;
  for (std::size_t i = 1; i < legs.size(); ++i) {
    total += unidim_cost(abs_diff(legs[i].to, from));
    from = legs[i].to;
  }
  return total;
}

Coord estimate_remaining(const Configuration& c, std::span<const Position> suffix,
                         const VisitParams& params) {
  if (suffix.empty()) return 0;
  Coord best = 0;
  thread_local std::vector<Coord> projected;
  for (std::size_t dim = 0; dim < 2; ++dim) {
    Coord cost = 0;
    if (params.alpha > 0) {
      cost = leg_cost_from(c.pos[dim], c.vel[dim], suffix.back()[dim], true).cost;
    } else {
      projected.clear();
      for (const auto& p : suffix) projected.push_back(p[dim]);
      cost = dimension_estimate(c.pos[dim], c.vel[dim], projected);
    }
    best = std::max(best, cost);
  }
  return best;
}

}  // namespace vtsp
