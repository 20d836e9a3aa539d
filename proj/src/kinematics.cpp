#include "vtsp/kinematics.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace vtsp {

namespace {

using Wide = __int128;

const std::vector<Vec2> kNineDeltas = velocity_deltas<2>(SuccessorModel::NineSuccessor);
const std::vector<Vec2> kFiveDeltas = velocity_deltas<2>(SuccessorModel::FiveSuccessor);

bool speed_ok(const Velocity& v, const VisitParams& params) {
  if (!params.nu) return true;
  return norm2(v) <= *params.nu * *params.nu;
}

// Squared distance from `p` to the closed segment [a, b], as num / den with
// den > 0.
struct SquaredDistance {
  Wide num;
  Wide den;
};

SquaredDistance segment_distance2(const Position& a, const Position& b, const Position& p) {
  const Vec2 d = b - a;
  const Vec2 w = p - a;
  const Wide len2 = norm2(d);
  const Wide t = dot(w, d);
  if (len2 == 0 || t <= 0) return {norm2(w), 1};
  if (t >= len2) return {norm2(p - b), 1};
  return {Wide(norm2(w)) * len2 - t * t, len2};
}

bool within_alpha(const SquaredDistance& dist, Coord alpha) {
  return dist.num <= Wide(alpha) * alpha * dist.den;
}

// Projection parameter of `p` onto [a, b], clamped, scaled by |b - a|^2.
Wide clamped_projection(const Position& a, const Position& b, const Position& p) {
  const Vec2 d = b - a;
  const Wide len2 = norm2(d);
  if (len2 == 0) return 0;
  return std::clamp<Wide>(dot(p - a, d), 0, len2);
}

}  // namespace

std::span<const Vec2> velocity_deltas_2d(SuccessorModel model) {
  return model == SuccessorModel::NineSuccessor ? std::span<const Vec2>(kNineDeltas)
                                                : std::span<const Vec2>(kFiveDeltas);
}

void Instance::validate() const {
  if (cities.empty()) throw InvalidArgument("instance has no cities");
  if (start >= cities.size())
    throw InvalidArgument("start index " + std::to_string(start) + " out of range");
  std::set<Position> seen(cities.begin(), cities.end());
  if (seen.size() != cities.size()) throw InvalidArgument("cities are not pairwise distinct");
  if (params.alpha < 0) throw InvalidArgument("alpha must be non-negative");
  if (params.nu && *params.nu < 0) throw InvalidArgument("nu must be non-negative");
}

bool is_valid_trajectory(std::span<const Configuration> t, SuccessorModel model) {
  if (t.empty()) throw InvalidArgument("trajectory is empty");
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!is_successor(t[i - 1], t[i], model)) return false;
  }
  return true;
}

std::vector<Configuration> reverse_trajectory(std::span<const Configuration> t) {
  std::vector<Configuration> out;
  out.reserve(t.size());
  for (auto it = t.rbegin(); it != t.rend(); ++it) out.push_back(reversal(*it));
  return out;
}

namespace {

// Cheap rejection: city outside the segment's bounding box grown by alpha.
bool near_box(const Position& a, const Position& b, const Position& p, Coord alpha) {
  for (std::size_t d = 0; d < 2; ++d) {
    if (p[d] < std::min(a[d], b[d]) - alpha || p[d] > std::max(a[d], b[d]) + alpha) return false;
  }
  return true;
}

}  // namespace

bool segment_visits(const Configuration& c, const Configuration& next, const Position& city,
                    const VisitParams& params) {
  if (!speed_ok(next.vel, params)) return false;
  if (!near_box(params.beta ? next.pos : c.pos, next.pos, city, params.alpha)) return false;
  if (params.beta) return within_alpha({norm2(city - next.pos), 1}, params.alpha);
  return within_alpha(segment_distance2(c.pos, next.pos, city), params.alpha);
}

std::size_t advance_visits(const Configuration& c, const Configuration& next,
                           std::span<const Position> suffix, const VisitParams& params) {
  if (!speed_ok(next.vel, params)) return 0;
  std::size_t consumed = 0;
  Wide last = 0;
  for (const auto& city : suffix) {
    if (!segment_visits(c, next, city, params)) break;
    if (!params.beta) {
      const Wide t = clamped_projection(c.pos, next.pos, city);
      if (t < last) break;
      last = t;
    }
    ++consumed;
  }
  return consumed;
}

}  // namespace vtsp
