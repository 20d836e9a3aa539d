#include "vtsp/reduce.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <string>

namespace vtsp {

namespace {

constexpr Coord kInf = std::numeric_limits<Coord>::max() / 4;

Coord add(Coord a, const std::optional<Coord>& w) { return w ? a + *w : kInf; }

}  // namespace

bool ArcMatrix::symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Coord ArcMatrix::total() const {
  Coord s = 0;
  for (const auto& w : w_)
    if (w) s += *w;
  return s;
}

GtspInstance to_gtsp(const Instance& inst, const SearchBox& box, const GtspGuard& guard) {
  inst.validate();
  if (inst.size() > guard.max_cities)
    throw GuardRefused("to_gtsp: " + std::to_string(inst.size()) + " cities exceed the guard of " +
                       std::to_string(guard.max_cities));
  if (box.area() > guard.max_box_area)
    throw GuardRefused("to_gtsp: box area " + std::to_string(box.area()) +
                       " exceeds the guard of " + std::to_string(guard.max_box_area));
  const Configuration home = at_rest(inst.start_city());
  if (!box.contains(home)) throw InvalidArgument("to_gtsp: start city outside the box");

  GtspInstance g;
  g.groups.resize(inst.size());
  g.start_group = inst.start;
  std::vector<std::vector<Configuration>> members(inst.size());
  members[inst.start].push_back(home);
  for (Coord x = box.lo[0]; x <= box.hi[0]; ++x) {
    for (Coord y = box.lo[1]; y <= box.hi[1]; ++y) {
      for (Coord vx = -box.max_speed[0]; vx <= box.max_speed[0]; ++vx) {
        for (Coord vy = -box.max_speed[1]; vy <= box.max_speed[1]; ++vy) {
          const Configuration c{Position{{x, y}}, Velocity{{vx, vy}}};
          const Configuration prev{c.pos - c.vel, Velocity{}};
          if (!box.contains(prev.pos)) continue;
          for (std::size_t city = 0; city < inst.size(); ++city) {
            if (city == inst.start) continue;
            if (segment_visits(prev, c, inst.cities[city], inst.params))
              members[city].push_back(c);
          }
        }
      }
    }
  }
  for (std::size_t city = 0; city < inst.size(); ++city) {
    for (const auto& c : members[city]) {
      g.groups[city].push_back(g.nodes.size());
      g.nodes.push_back(c);
      g.node_city.push_back(city);
    }
  }

  // One BFS per distinct configuration.
  std::vector<Configuration> distinct(g.nodes);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::map<Configuration, std::vector<std::optional<Coord>>> dist;
  for (const auto& c : distinct) dist[c] = bfs_distances(c, distinct, box, inst.model);
  auto index_of = [&](const Configuration& c) {
    return static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), c) -
                                    distinct.begin());
  };

  g.weights = ArcMatrix(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& row = dist.at(g.nodes[i]);
    for (std::size_t j = 0; j < g.nodes.size(); ++j) {
      if (g.node_city[i] == g.node_city[j]) continue;
      g.weights.set(i, j, row[index_of(g.nodes[j])]);
    }
  }
  return g;
}

AtspInstance noon_bean(const GtspInstance& g) {
  for (const auto& grp : g.groups)
    if (grp.empty()) throw InvalidArgument("noon_bean: empty group");
  const std::size_t n = g.nodes.size();
  const Coord big_m = 1 + g.weights.total();
  // Cycle predecessor of every node inside its group.
  std::vector<std::size_t> pred(n);
  for (const auto& grp : g.groups) {
    for (std::size_t i = 0; i < grp.size(); ++i) pred[grp[i]] = grp[(i + grp.size() - 1) % grp.size()];
  }
  AtspInstance a;
  a.weights = ArcMatrix(n);
  for (const auto& grp : g.groups) {
    if (grp.size() < 2) continue;
    for (std::size_t i = 0; i < grp.size(); ++i) a.weights.set(grp[i], grp[(i + 1) % grp.size()], 0);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g.node_city[i] == g.node_city[j]) continue;
      if (const auto& w = g.weights.at(i, j)) a.weights.set(pred[i], j, *w + big_m);
    }
  }
  a.offset = static_cast<Coord>(g.groups.size()) * big_m;
  return a;
}

StspInstance atsp_to_stsp(const AtspInstance& a) {
  const std::size_t n = a.weights.size();
  StspInstance s;
  s.weights = ArcMatrix(3 * n);
  s.offset = a.offset;
  auto edge = [&](std::size_t u, std::size_t v, Coord w) {
    s.weights.set(u, v, w);
    s.weights.set(v, u, w);
  };
  for (std::size_t i = 0; i < n; ++i) {
    edge(3 * i, 3 * i + 1, 0);
    edge(3 * i + 1, 3 * i + 2, 0);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j)
        if (const auto& w = a.weights.at(i, j)) edge(3 * i + 2, 3 * j, *w);
  return s;
}

std::optional<Coord> gtsp_optimum(const GtspInstance& g) {
  const std::size_t k = g.groups.size();
  if (k == 0) return std::nullopt;
  for (const auto& grp : g.groups)
    if (grp.empty()) return std::nullopt;
  if (k == 1) return 0;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < k; ++i)
    if (i != g.start_group) rest.push_back(i);
  Coord best = kInf;
  // Every group order with the start group first; exact layered shortest path
  // over the node choices of each order.
  do {
    for (std::size_t first : g.groups[g.start_group]) {
      std::vector<std::size_t> layer{first};
      std::vector<Coord> cost{0};
      for (std::size_t gi : rest) {
        const auto& next = g.groups[gi];
        std::vector<Coord> ncost(next.size(), kInf);
        for (std::size_t a = 0; a < layer.size(); ++a) {
          if (cost[a] >= kInf) continue;
          for (std::size_t b = 0; b < next.size(); ++b)
            ncost[b] = std::min(ncost[b], add(cost[a], g.weights.at(layer[a], next[b])));
        }
        layer = next;
        cost = std::move(ncost);
      }
      for (std::size_t a = 0; a < layer.size(); ++a)
        if (cost[a] < kInf) best = std::min(best, add(cost[a], g.weights.at(layer[a], first)));
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  if (best >= kInf) return std::nullopt;
  return best;
}

std::optional<Coord> atsp_optimum(const AtspInstance& a, std::size_t guard) {
  const std::size_t n = a.weights.size();
  if (n > guard)
    throw GuardRefused("atsp_optimum: " + std::to_string(n) + " nodes exceed the guard of " +
                       std::to_string(guard));
  if (n == 0) return std::nullopt;
  if (n == 1) return 0;
  // Held-Karp anchored at node 0 over the other n - 1 nodes.
  const std::size_t m = n - 1;
  const std::size_t full = (std::size_t(1) << m) - 1;
  std::vector<Coord> dp((full + 1) * m, kInf);
  auto at = [&](std::size_t mask, std::size_t j) -> Coord& { return dp[mask * m + j]; };
  for (std::size_t j = 0; j < m; ++j) at(std::size_t(1) << j, j) = add(0, a.weights.at(0, j + 1));
  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (std::size_t j = 0; j < m; ++j) {
      const Coord cur = at(mask, j);
      if (!(mask >> j & 1) || cur >= kInf) continue;
      for (std::size_t q = 0; q < m; ++q) {
        if (mask >> q & 1) continue;
        Coord& slot = at(mask | std::size_t(1) << q, q);
        slot = std::min(slot, add(cur, a.weights.at(j + 1, q + 1)));
      }
    }
  }
  Coord best = kInf;
  for (std::size_t j = 0; j < m; ++j)
    if (at(full, j) < kInf) best = std::min(best, add(at(full, j), a.weights.at(j + 1, 0)));
  if (best >= kInf) return std::nullopt;
  return best;
}

std::optional<Coord> stsp_optimum(const StspInstance& s, std::size_t guard) {
  const std::size_t n = s.weights.size();
  if (n > guard)
    throw GuardRefused("stsp_optimum: " + std::to_string(n) + " nodes exceed the guard of " +
                       std::to_string(guard));
  if (n == 0) return std::nullopt;
  if (n == 1) return 0;
  std::vector<std::vector<std::pair<Coord, std::size_t>>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j)
        if (const auto& w = s.weights.at(i, j)) adj[i].emplace_back(*w, j);
  for (auto& row : adj) std::sort(row.begin(), row.end());
  if (n == 2) {
    const auto& w = s.weights.at(0, 1);
    if (!w) return std::nullopt;
    return 2 * *w;
  }

  // Depth-first branch and bound from node 0. A node is open while it can
  // still take a tour edge: unvisited, the anchor, or the current path end.
  // Every unvisited node needs two open neighbours.
  std::vector<bool> visited(n, false);
  std::vector<int> open_nbrs(n, 0);
  for (std::size_t i = 0; i < n; ++i) open_nbrs[i] = static_cast<int>(adj[i].size());
  for (std::size_t i = 0; i < n; ++i)
    if (open_nbrs[i] < 2) return std::nullopt;
  Coord best = kInf;
  visited[0] = true;

  std::function<void(std::size_t, std::size_t, Coord)> dfs = [&](std::size_t end,
                                                                  std::size_t count, Coord cost) {
    if (cost >= best) return;
    if (count == n) {
      if (const auto& w = s.weights.at(end, 0)) best = std::min(best, cost + *w);
      return;
    }
    for (const auto& [w, v] : adj[end]) {
      if (visited[v]) continue;
      if (cost + w >= best) break;
      // `end` stops being open unless it is the anchor.
      bool feasible = true;
      if (end != 0) {
        for (const auto& [w2, x] : adj[end]) {
          --open_nbrs[x];
          if (!visited[x] && x != v && open_nbrs[x] < 2) feasible = false;
        }
      }
      if (feasible && !visited[v] && open_nbrs[v] < 1) feasible = false;
      if (feasible) {
        visited[v] = true;
        dfs(v, count + 1, cost + w);
        visited[v] = false;
      }
      if (end != 0)
        for (const auto& [w2, x] : adj[end]) ++open_nbrs[x];
    }
  };
  dfs(0, 1, 0);
  if (best >= kInf) return std::nullopt;
  return best;
}

}  // namespace vtsp
