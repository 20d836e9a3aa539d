#pragma once

// Exact breadth-first searches in the bounded configuration graph.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vtsp/kinematics.hpp"
#include "vtsp/tour.hpp"

namespace vtsp {

// Axis-aligned region every explored configuration must stay inside.
struct SearchBox {
  Position lo;
  Position hi;
  Vec2 max_speed;

  bool contains(const Position& p) const;
  bool contains(const Configuration& c) const;
  // Number of lattice coordinates along `dim`.
  Coord extent(std::size_t dim) const { return hi[dim] - lo[dim] + 1; }
  std::int64_t area() const { return extent(0) * extent(1); }
  SearchBox inflated(Coord by) const;
};

// Bounding box of the cities inflated by `margin` (default ceil(2 sqrt(L)) + 2,
// L the largest per-dimension spread), max_speed = ceil(sqrt(extent)) + 1.
SearchBox make_search_box(const Instance& inst, std::optional<Coord> margin = std::nullopt);

struct Trajectory {
  std::vector<Configuration> configurations;
  // Vector count.
  std::size_t cost() const { return configurations.empty() ? 0 : configurations.size() - 1; }
  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

// Minimum-vector trajectory between two configurations inside the box.
// Throws NotFound if `to` is unreachable.
Trajectory bfs_two_point(const Configuration& from, const Configuration& to,
                         const SearchBox& box, SuccessorModel model);

// Distances from `from` to each of `targets`; nullopt where unreachable.
std::vector<std::optional<Coord>> bfs_distances(const Configuration& from,
                                                std::span<const Configuration> targets,
                                                const SearchBox& box, SuccessorModel model);

// Minimum-cost closed trajectory realizing `tour`, from rest at the start city
// back to rest there, visiting in order per advance_visits.
Trajectory bfs_ordered(const Instance& inst, const Tour& tour, const SearchBox& box);

// Same, continued from an intermediate state: `from` with the first
// `visited` interior cities of the tour already consumed. The returned
// trajectory begins with `from`.
Trajectory bfs_ordered_from(const Instance& inst, const Tour& tour, const SearchBox& box,
                            const Configuration& from, std::size_t visited);

struct BruteForceResult {
  Tour tour;
  Trajectory trajectory;
};

// Global optimum over all visit orders by BFS over (configuration, visited
// set). Refuses instances with more than `guard` cities.
BruteForceResult brute_force_vtsp(const Instance& inst, const SearchBox& box,
                                  std::size_t guard = 8);

// Visit order induced by a closed trajectory: cities sorted by first visit,
// ties on one vector broken by position along it. Returns nullopt if some
// city is never visited.
std::optional<Tour> induced_tour(const Instance& inst, std::span<const Configuration> t);

// Whether `t` is a valid trajectory from rest at the start to rest at the
// start that consumes every interior city of `tour` in order.
bool realizes_tour(const Instance& inst, const Tour& tour, std::span<const Configuration> t);

}  // namespace vtsp
