#pragma once

// Trajectory oracle: optimal trajectory for a fixed visit order.

#include <cstddef>
#include <functional>
#include <vector>

#include "vtsp/configspace.hpp"
#include "vtsp/kinematics.hpp"
#include "vtsp/tour.hpp"

namespace vtsp {

struct SearchState {
  Configuration config;
  std::size_t visited = 0;
  friend auto operator<=>(const SearchState&, const SearchState&) = default;
};

struct SearchStats {
  std::size_t expanded = 0;
  std::size_t generated = 0;
  // Settled states later reached with a strictly smaller g; always 0 when the
  // estimate is consistent on the explored region.
  std::size_t reopened = 0;
};

struct AstarOptions {
  // Called once per expansion with the state, its g and its estimate.
  std::function<void(const SearchState&, Coord g, Coord h)> on_expand;
};

// Consume `targets[visited..]` in order starting from `from`, then come to
// rest on `goal`.
struct MultipointQuery {
  Configuration from;
  std::vector<Position> targets;
  std::size_t visited = 0;
  Position goal;
};

struct MultipointResult {
  Trajectory trajectory;
  // visited[i]: targets consumed after configuration i.
  std::vector<std::size_t> visited;
  SearchStats stats;
};

// A* over (configuration, visited) with f = g + estimate_remaining. Throws
// NotFound if the box is exhausted.
MultipointResult solve_multipoint(const MultipointQuery& query, const VisitParams& params,
                                  SuccessorModel model, const SearchBox& box,
                                  const AstarOptions& options = {});

// racetrack(tour): optimal closed trajectory realizing the tour.
Trajectory multipoint_astar(const Instance& inst, const Tour& tour, const SearchBox& box,
                            const AstarOptions& options = {}, SearchStats* stats = nullptr);

// Sliding-window approximation: plans over the next `window` tour cities
// (the return to the start counts as one), keeps the part up to the first of
// them, and continues from its last configuration. window >= 2.
Trajectory limited_view(const Instance& inst, const Tour& tour, const SearchBox& box,
                        std::size_t window);

}  // namespace vtsp
