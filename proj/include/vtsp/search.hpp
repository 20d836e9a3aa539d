#pragma once

// Visit-order search: 2-opt flips driven by the trajectory oracle, plus an
// exact Euclidean baseline.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vtsp/configspace.hpp"
#include "vtsp/tour.hpp"

namespace vtsp {

// Which trajectory oracle prices a tour: full multipoint A* or limited view
// with the given window.
struct OracleMode {
  std::optional<std::size_t> window;
  static OracleMode full() { return {}; }
  static OracleMode limited(std::size_t w) { return {w}; }
};

Trajectory racetrack(const Instance& inst, const Tour& tour, const SearchBox& box,
                     OracleMode mode);

// Boustrophedon scan of the bounding box: rows by y, x ascending on even rows
// (counted from the lowest y) and descending on odd rows, rotated to begin at
// the start city.
Tour init_walk(const Instance& inst);

// Reverses positions i..j of the closed tour; 1 <= i <= j <= n - 1.
Tour flip(const Tour& tour, std::size_t i, std::size_t j);

struct FlipOptions {
  OracleMode mode;
  // Skip candidates whose Euclidean length exceeds the incumbent's by more
  // than this fraction.
  std::optional<double> prefilter;
  // Starting tour; init_walk when absent.
  std::optional<Tour> initial;
};

struct SolveReport {
  Tour initial_tour;
  Tour final_tour;
  Trajectory initial_trajectory;
  Trajectory final_trajectory;
  std::size_t flips_applied = 0;
  std::size_t oracle_calls = 0;
  std::size_t prefiltered = 0;
  std::optional<double> etsp_cost;  // Euclidean length of final_tour
};

// First-improvement 2-opt over interior positions with scan restart.
SolveReport flip_vtsp(const Instance& inst, const SearchBox& box, const FlipOptions& options);

struct EtspResult {
  Tour tour;
  double length = 0;
};

// Exact Euclidean TSP by subset dynamic programming; among optimal tours
// (within 1e-9 relative) the lexicographically smallest order is returned.
// Refuses more than `guard` cities.
EtspResult held_karp_etsp(std::span<const Position> cities, std::size_t start,
                          std::size_t guard = 15);

}  // namespace vtsp
