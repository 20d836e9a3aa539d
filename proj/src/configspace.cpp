#include "vtsp/configspace.hpp"

#include <algorithm>
#include <string>

#include "absl/container/flat_hash_map.h"
#include "state_key.hpp"
#include "vtsp/intmath.hpp"

namespace vtsp {

namespace {

using detail::StateCodec;
using Key = std::uint64_t;

// Unit-cost BFS over packed keys. The first settlement of a key wins, so ties
// follow expansion order.
template <class Expand, class IsGoal>
std::optional<std::vector<Key>> bfs(Key start, Expand&& expand, IsGoal&& is_goal) {
  absl::flat_hash_map<Key, Key> parent;
  parent.emplace(start, start);
  std::vector<Key> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Key key = queue[head];
    if (is_goal(key)) {
      std::vector<Key> path{key};
      for (Key k = key; k != start;) {
        k = parent.at(k);
        path.push_back(k);
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    expand(key, [&](Key next) {
      if (parent.try_emplace(next, key).second) queue.push_back(next);
    });
  }
  return std::nullopt;
}

Trajectory to_trajectory(const StateCodec& codec, const std::vector<Key>& path) {
  Trajectory t;
  t.configurations.reserve(path.size());
  for (Key k : path) t.configurations.push_back(codec.config(k));
  return t;
}

template <class F>
void for_each_successor_in(const SearchBox& box, SuccessorModel model, const Configuration& c,
                           F&& f) {
  for (const Vec2& delta : velocity_deltas_2d(model)) {
    const Vec2 vel = c.vel + delta;
    const Configuration next{c.pos + vel, vel};
    if (box.contains(next)) f(next);
  }
}

void require_inside(const SearchBox& box, const Configuration& c, const char* what) {
  if (!box.contains(c)) throw InvalidArgument(std::string(what) + " lies outside the search box");
}

}  // namespace

bool SearchBox::contains(const Position& p) const {
  return p[0] >= lo[0] && p[0] <= hi[0] && p[1] >= lo[1] && p[1] <= hi[1];
}

bool SearchBox::contains(const Configuration& c) const {
  return contains(c.pos) && c.vel[0] >= -max_speed[0] && c.vel[0] <= max_speed[0] &&
         c.vel[1] >= -max_speed[1] && c.vel[1] <= max_speed[1];
}

SearchBox SearchBox::inflated(Coord by) const {
  SearchBox b = *this;
  for (std::size_t d = 0; d < 2; ++d) {
    b.lo[d] -= by;
    b.hi[d] += by;
    b.max_speed[d] = ceil_sqrt(b.extent(d)) + 1;
  }
  return b;
}

SearchBox make_search_box(const Instance& inst, std::optional<Coord> margin) {
  if (inst.cities.empty()) throw InvalidArgument("make_search_box: no cities");
  SearchBox box;
  box.lo = box.hi = inst.cities.front();
  for (const auto& p : inst.cities) {
    for (std::size_t d = 0; d < 2; ++d) {
      box.lo[d] = std::min(box.lo[d], p[d]);
      box.hi[d] = std::max(box.hi[d], p[d]);
    }
  }
  const Coord spread = std::max(box.hi[0] - box.lo[0], box.hi[1] - box.lo[1]);
  const Coord m = margin.value_or(ceil_sqrt(4 * spread) + 2);
  if (m < 0) throw InvalidArgument("make_search_box: negative margin");
  return box.inflated(m);
}

Trajectory bfs_two_point(const Configuration& from, const Configuration& to,
                         const SearchBox& box, SuccessorModel model) {
  require_inside(box, from, "bfs_two_point: source");
  require_inside(box, to, "bfs_two_point: target");
  const StateCodec codec(box);
  const Key goal = codec.encode(to, 0);
  auto path = bfs(
      codec.encode(from, 0),
      [&](Key key, auto&& emit) {
        for_each_successor_in(box, model, codec.config(key),
                              [&](const Configuration& n) { emit(codec.encode(n, 0)); });
      },
      [&](Key key) { return key == goal; });
  if (!path) throw NotFound("bfs_two_point: target unreachable inside the box");
  return to_trajectory(codec, *path);
}

std::vector<std::optional<Coord>> bfs_distances(const Configuration& from,
                                                std::span<const Configuration> targets,
                                                const SearchBox& box, SuccessorModel model) {
  require_inside(box, from, "bfs_distances: source");
  const StateCodec codec(box);
  absl::flat_hash_map<Key, Coord> dist;
  const Key start = codec.encode(from, 0);
  dist.emplace(start, 0);
  std::vector<Key> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Key key = queue[head];
    const Coord d = dist.at(key);
    for_each_successor_in(box, model, codec.config(key), [&](const Configuration& n) {
      const Key nk = codec.encode(n, 0);
      if (dist.try_emplace(nk, d + 1).second) queue.push_back(nk);
    });
  }
  std::vector<std::optional<Coord>> out;
  out.reserve(targets.size());
  for (const auto& t : targets) {
    if (!box.contains(t)) {
      out.push_back(std::nullopt);
      continue;
    }
    auto it = dist.find(codec.encode(t, 0));
    out.push_back(it == dist.end() ? std::nullopt : std::optional<Coord>(it->second));
  }
  return out;
}

Trajectory bfs_ordered_from(const Instance& inst, const Tour& tour, const SearchBox& box,
                            const Configuration& from, std::size_t visited) {
  tour.validate(inst);
  const std::vector<Position> targets = tour.interior_cities(inst);
  if (visited > targets.size()) throw InvalidArgument("bfs_ordered_from: visited out of range");
  require_inside(box, from, "bfs_ordered_from: source");
  const Configuration goal_config = at_rest(inst.start_city());
  require_inside(box, goal_config, "bfs_ordered_from: start city");
  const StateCodec codec(box);
  const std::span<const Position> all(targets);
  const Key goal = codec.encode(goal_config, targets.size());
  auto path = bfs(
      codec.encode(from, visited),
      [&](Key key, auto&& emit) {
        const Configuration c = codec.config(key);
        const std::size_t k = StateCodec::aux(key);
        for_each_successor_in(box, inst.model, c, [&](const Configuration& n) {
          const std::size_t nk = k + advance_visits(c, n, all.subspan(k), inst.params);
          emit(codec.encode(n, nk));
        });
      },
      [&](Key key) { return key == goal; });
  if (!path) throw NotFound("bfs_ordered: tour not realizable inside the box");
  return to_trajectory(codec, *path);
}

Trajectory bfs_ordered(const Instance& inst, const Tour& tour, const SearchBox& box) {
  return bfs_ordered_from(inst, tour, box, at_rest(inst.start_city()), 0);
}

BruteForceResult brute_force_vtsp(const Instance& inst, const SearchBox& box, std::size_t guard) {
  inst.validate();
  if (inst.size() > guard)
    throw GuardRefused("brute_force_vtsp: " + std::to_string(inst.size()) +
                       " cities exceed the guard of " + std::to_string(guard));
  if (inst.size() > 16) throw GuardRefused("brute_force_vtsp: more than 16 cities");
  // Bit b of the mask stands for the b-th non-start city.
  std::vector<Position> others;
  for (std::size_t i = 0; i < inst.size(); ++i)
    if (i != inst.start) others.push_back(inst.cities[i]);
  const std::uint64_t full = (std::uint64_t(1) << others.size()) - 1;
  const Configuration home = at_rest(inst.start_city());
  require_inside(box, home, "brute_force_vtsp: start city");
  const StateCodec codec(box);
  const Key goal = codec.encode(home, full);
  auto path = bfs(
      codec.encode(home, 0),
      [&](Key key, auto&& emit) {
        const Configuration c = codec.config(key);
        const std::uint64_t mask = StateCodec::aux(key);
        for_each_successor_in(box, inst.model, c, [&](const Configuration& n) {
          std::uint64_t m = mask;
          for (std::size_t b = 0; b < others.size(); ++b) {
            if (!(m >> b & 1) && segment_visits(c, n, others[b], inst.params)) m |= 1u << b;
          }
          emit(codec.encode(n, m));
        });
      },
      [&](Key key) { return key == goal; });
  if (!path) throw NotFound("brute_force_vtsp: no closed trajectory inside the box");
  BruteForceResult out;
  out.trajectory = to_trajectory(codec, *path);
  auto tour = induced_tour(inst, out.trajectory.configurations);
  if (!tour) throw NotFound("brute_force_vtsp: internal error, optimal trajectory misses a city");
  out.tour = std::move(*tour);
  return out;
}

std::optional<Tour> induced_tour(const Instance& inst, std::span<const Configuration> t) {
  std::vector<bool> seen(inst.size(), false);
  seen[inst.start] = true;
  std::vector<std::size_t> interior;
  for (std::size_t s = 1; s < t.size(); ++s) {
    const Configuration& a = t[s - 1];
    const Configuration& b = t[s];
    const Vec2 d = b.pos - a.pos;
    const Coord len2 = norm2(d);
    std::vector<std::pair<Coord, std::size_t>> fresh;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      if (seen[i] || !segment_visits(a, b, inst.cities[i], inst.params)) continue;
      const Coord proj = inst.params.beta || len2 == 0
                             ? 0
                             : std::clamp<Coord>(dot(inst.cities[i] - a.pos, d), 0, len2);
      fresh.emplace_back(proj, i);
    }
    std::sort(fresh.begin(), fresh.end());
    for (const auto& [proj, i] : fresh) {
      seen[i] = true;
      interior.push_back(i);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) return std::nullopt;
  return Tour::closed(inst.start, interior);
}

bool realizes_tour(const Instance& inst, const Tour& tour, std::span<const Configuration> t) {
  if (t.empty() || !is_valid_trajectory(t, inst.model)) return false;
  const Configuration home = at_rest(inst.start_city());
  if (t.front() != home || t.back() != home) return false;
  const std::vector<Position> targets = tour.interior_cities(inst);
  const std::span<const Position> all(targets);
  std::size_t k = 0;
  for (std::size_t s = 1; s < t.size(); ++s) k += advance_visits(t[s - 1], t[s], all.subspan(k), inst.params);
  return k == targets.size();
}

}  // namespace vtsp
