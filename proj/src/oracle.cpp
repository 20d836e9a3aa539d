#include "vtsp/oracle.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "absl/container/flat_hash_map.h"
#include "state_key.hpp"
#include "vtsp/estimate.hpp"

namespace vtsp {

namespace {

using detail::StateCodec;
using Key = std::uint64_t;

struct Node {
  std::int32_t g = 0;
  std::int32_t h = 0;
  Key parent = 0;
  bool closed = false;
};

struct OpenEntry {
  std::int32_t f;
  std::int32_t g;
  Key key;
};

// Pops smallest f, then largest g, then smallest key (lexicographic
// pos, vel, visited).
struct WorseThan {
  bool operator()(const OpenEntry& a, const OpenEntry& b) const {
    if (a.f != b.f) return a.f > b.f;
    if (a.g != b.g) return a.g < b.g;
    return a.key > b.key;
  }
};

}  // namespace

MultipointResult solve_multipoint(const MultipointQuery& query, const VisitParams& params,
                                  SuccessorModel model, const SearchBox& box,
                                  const AstarOptions& options) {
  const std::size_t m = query.targets.size();
  if (query.visited > m) throw InvalidArgument("solve_multipoint: visited out of range");
  if (!box.contains(query.from)) throw InvalidArgument("solve_multipoint: source outside box");
  const Configuration goal_config = at_rest(query.goal);
  if (!box.contains(goal_config)) throw InvalidArgument("solve_multipoint: goal outside box");

  const StateCodec codec(box);
  std::vector<Position> suffix_all(query.targets);
  suffix_all.push_back(query.goal);
  const std::span<const Position> suffix(suffix_all);
  const std::span<const Position> targets(query.targets);
  const Key goal = codec.encode(goal_config, m);

  MultipointResult result;
  absl::flat_hash_map<Key, Node> nodes;
  std::priority_queue<OpenEntry, std::vector<OpenEntry>, WorseThan> open;

  const Key start = codec.encode(query.from, query.visited);
  const auto h0 = static_cast<std::int32_t>(
      estimate_remaining(query.from, suffix.subspan(query.visited), params));
  nodes.emplace(start, Node{0, h0, start, false});
  open.push({h0, 0, start});

  const auto deltas = velocity_deltas_2d(model);
  while (!open.empty()) {
    const OpenEntry top = open.top();
    open.pop();
    Node& node = nodes.at(top.key);
    if (node.closed || top.g != node.g) continue;
    node.closed = true;
    ++result.stats.expanded;
    const Configuration c = codec.config(top.key);
    const std::size_t k = StateCodec::aux(top.key);
    if (options.on_expand) options.on_expand({c, k}, node.g, node.h);

    if (top.key == goal) {
      std::vector<Key> path{top.key};
      for (Key key = top.key; key != start;) {
        key = nodes.at(key).parent;
        path.push_back(key);
      }
      std::reverse(path.begin(), path.end());
      for (Key key : path) {
        result.trajectory.configurations.push_back(codec.config(key));
        result.visited.push_back(StateCodec::aux(key));
      }
      return result;
    }

    const std::int32_t g_next = node.g + 1;
    for (const Vec2& delta : deltas) {
      const Vec2 vel = c.vel + delta;
      const Configuration n{c.pos + vel, vel};
      if (!box.contains(n)) continue;
      const std::size_t nk = k + advance_visits(c, n, targets.subspan(k), params);
      const Key key = codec.encode(n, nk);
      ++result.stats.generated;
      auto [it, inserted] = nodes.try_emplace(key);
      Node& nn = it->second;
      if (inserted) {
        nn.h = static_cast<std::int32_t>(estimate_remaining(n, suffix.subspan(nk), params));
      } else if (g_next >= nn.g) {
        continue;
      } else if (nn.closed) {
        nn.closed = false;
        ++result.stats.reopened;
      }
      nn.g = g_next;
      nn.parent = top.key;
      open.push({g_next + nn.h, g_next, key});
    }
  }
  throw NotFound("multipoint A*: tour not realizable inside the box");
}

Trajectory multipoint_astar(const Instance& inst, const Tour& tour, const SearchBox& box,
                            const AstarOptions& options, SearchStats* stats) {
  tour.validate(inst);
  MultipointQuery q{at_rest(inst.start_city()), tour.interior_cities(inst), 0, inst.start_city()};
  MultipointResult r = solve_multipoint(q, inst.params, inst.model, box, options);
  if (stats) *stats = r.stats;
  return std::move(r.trajectory);
}

Trajectory limited_view(const Instance& inst, const Tour& tour, const SearchBox& box,
                        std::size_t window) {
  if (window < 2) throw InvalidArgument("limited_view: window must be at least 2");
  tour.validate(inst);
  const std::vector<Position> targets = tour.interior_cities(inst);
  const std::span<const Position> all(targets);
  const std::size_t m = targets.size();

  Trajectory out;
  Configuration current = at_rest(inst.start_city());
  out.configurations.push_back(current);
  std::size_t k = 0;
  while (true) {
    if (m - k + 1 <= window) {
      // Last window: remaining cities plus the return, stopping at the start.
      MultipointQuery q{current, std::vector<Position>(all.begin() + k, all.end()), 0,
                        inst.start_city()};
      auto r = solve_multipoint(q, inst.params, inst.model, box);
      const auto& cs = r.trajectory.configurations;
      out.configurations.insert(out.configurations.end(), cs.begin() + 1, cs.end());
      return out;
    }
    // Intermediate window: the window's last city is where the plan comes to
    // rest.
    const auto first = all.begin() + k;
    MultipointQuery q{current, std::vector<Position>(first, first + (window - 1)), 0,
                      *(first + (window - 1))};
    auto r = solve_multipoint(q, inst.params, inst.model, box);
    const auto& cs = r.trajectory.configurations;
    std::size_t i = 1;
    while (r.visited[i] == 0) ++i;
    // Replay the kept vectors against the whole remaining tour, which may
    // consume more than the window saw.
    for (std::size_t s = 1; s <= i; ++s) {
      k += advance_visits(cs[s - 1], cs[s], all.subspan(k), inst.params);
      out.configurations.push_back(cs[s]);
    }
    current = cs[i];
  }
}

}  // namespace vtsp
