#include "vtsp/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "vtsp/oracle.hpp"

namespace vtsp {

Trajectory racetrack(const Instance& inst, const Tour& tour, const SearchBox& box,
                     OracleMode mode) {
  if (mode.window) return limited_view(inst, tour, box, *mode.window);
  return multipoint_astar(inst, tour, box);
}

Tour init_walk(const Instance& inst) {
  inst.validate();
  Coord ymin = inst.cities.front()[1];
  for (const auto& p : inst.cities) ymin = std::min(ymin, p[1]);
  std::vector<std::size_t> idx(inst.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const Position& pa = inst.cities[a];
    const Position& pb = inst.cities[b];
    if (pa[1] != pb[1]) return pa[1] < pb[1];
    const bool odd_row = (pa[1] - ymin) % 2 != 0;
    return odd_row ? pa[0] > pb[0] : pa[0] < pb[0];
  });
  const auto at = std::find(idx.begin(), idx.end(), inst.start);
  std::rotate(idx.begin(), at, idx.end());
  return Tour::closed(inst.start, std::span<const std::size_t>(idx).subspan(1));
}

Tour flip(const Tour& tour, std::size_t i, std::size_t j) {
  const std::size_t n = tour.order.size() - 1;
  if (tour.order.size() < 2 || i < 1 || j > n - 1 || i > j)
    throw InvalidArgument("flip: need 1 <= i <= j <= " + std::to_string(n - 1) + ", got i=" +
                          std::to_string(i) + " j=" + std::to_string(j));
  Tour out = tour;
  std::reverse(out.order.begin() + i, out.order.begin() + j + 1);
  return out;
}

SolveReport flip_vtsp(const Instance& inst, const SearchBox& box, const FlipOptions& options) {
  SolveReport report;
  report.initial_tour = options.initial ? *options.initial : init_walk(inst);
  report.initial_tour.validate(inst);
  report.initial_trajectory = racetrack(inst, report.initial_tour, box, options.mode);
  report.oracle_calls = 1;

  Tour best = report.initial_tour;
  Trajectory best_traj = report.initial_trajectory;
  double best_len = best.euclidean_length(inst);
  const std::size_t n = best.order.size() - 1;

  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 1; i + 1 <= n - 1 && !improved; ++i) {
      for (std::size_t j = i + 1; j <= n - 1; ++j) {
        Tour candidate = flip(best, i, j);
        const double len = candidate.euclidean_length(inst);
        if (options.prefilter && len > best_len * (1.0 + *options.prefilter)) {
          ++report.prefiltered;
          continue;
        }
        Trajectory t = racetrack(inst, candidate, box, options.mode);
        ++report.oracle_calls;
        if (t.cost() < best_traj.cost()) {
          best = std::move(candidate);
          best_traj = std::move(t);
          best_len = len;
          ++report.flips_applied;
          improved = true;
          break;
        }
      }
    }
  }
  report.final_tour = std::move(best);
  report.final_trajectory = std::move(best_traj);
  report.etsp_cost = best_len;
  return report;
}

EtspResult held_karp_etsp(std::span<const Position> cities, std::size_t start,
                          std::size_t guard) {
  if (cities.empty()) throw InvalidArgument("held_karp_etsp: no cities");
  if (start >= cities.size()) throw InvalidArgument("held_karp_etsp: start out of range");
  if (cities.size() > guard)
    throw GuardRefused("held_karp_etsp: " + std::to_string(cities.size()) +
                       " cities exceed the guard of " + std::to_string(guard));
  auto dist = [&](std::size_t a, std::size_t b) {
    return std::sqrt(static_cast<double>(norm2(cities[a] - cities[b])));
  };
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < cities.size(); ++i)
    if (i != start) others.push_back(i);
  const std::size_t m = others.size();
  EtspResult out;
  if (m == 0) {
    out.tour = Tour::closed(start, {});
    return out;
  }

  // rest[mask][j]: shortest completion from others[j] having visited `mask`
  // (which contains j), back to the start.
  const std::size_t full = (std::size_t(1) << m) - 1;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> rest((full + 1) * m, kInf);
  auto at = [&](std::size_t mask, std::size_t j) -> double& { return rest[mask * m + j]; };
  for (std::size_t j = 0; j < m; ++j) at(full, j) = dist(others[j], start);
  for (std::size_t mask = full; mask-- > 1;) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!(mask >> j & 1)) continue;
      double best = kInf;
      for (std::size_t q = 0; q < m; ++q) {
        if (mask >> q & 1) continue;
        best = std::min(best, dist(others[j], others[q]) + at(mask | std::size_t(1) << q, q));
      }
      at(mask, j) = best;
    }
  }

  auto tol = [](double v) { return 1e-9 * std::max(1.0, v); };
  double remaining = kInf;
  for (std::size_t q = 0; q < m; ++q)
    remaining = std::min(remaining, dist(start, others[q]) + at(std::size_t(1) << q, q));
  out.length = remaining;

  std::vector<std::size_t> interior;
  std::size_t mask = 0;
  std::size_t cur = start;
  while (mask != full) {
    for (std::size_t q = 0; q < m; ++q) {
      if (mask >> q & 1) continue;
      const std::size_t next = mask | std::size_t(1) << q;
      const double via = dist(cur, others[q]) + at(next, q);
      if (via <= remaining + tol(remaining)) {
        interior.push_back(others[q]);
        remaining = at(next, q);
        mask = next;
        cur = others[q];
        break;
      }
    }
  }
  out.tour = Tour::closed(start, interior);
  return out;
}

}  // namespace vtsp
