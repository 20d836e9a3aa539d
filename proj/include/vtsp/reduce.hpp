#pragma once

// VTSP -> GroupTSP -> asymmetric TSP -> symmetric TSP, with exact solvers
// for checking cost equivalence on tiny instances.

#include <cstddef>
#include <optional>
#include <vector>

#include "vtsp/configspace.hpp"
#include "vtsp/kinematics.hpp"

namespace vtsp {

// Dense matrix of arc weights; nullopt marks an absent arc.
class ArcMatrix {
 public:
  ArcMatrix() = default;
  explicit ArcMatrix(std::size_t n) : n_(n), w_(n * n) {}

  std::size_t size() const { return n_; }
  const std::optional<Coord>& at(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, std::optional<Coord> v) { w_[i * n_ + j] = v; }
  bool symmetric() const;
  // Sum of all present weights.
  Coord total() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::optional<Coord>> w_;
};

struct GtspInstance {
  std::vector<Configuration> nodes;
  std::vector<std::size_t> node_city;            // the city each node stands for
  std::vector<std::vector<std::size_t>> groups;  // one per city, disjoint
  std::size_t start_group = 0;
  ArcMatrix weights;                             // absent inside a group
};

struct AtspInstance {
  ArcMatrix weights;
  // Constant to subtract from a tour cost to recover the GTSP cost.
  Coord offset = 0;
};

struct StspInstance {
  ArcMatrix weights;  // symmetric
  Coord offset = 0;
};

struct GtspGuard {
  std::size_t max_cities = 4;
  std::int64_t max_box_area = 400;
};

// One node per (configuration, city) pair such that the configuration's
// incoming vector visits the city; the start city's group is the single
// configuration at rest on it. Weights are configuration-graph distances
// inside the box.
GtspInstance to_gtsp(const Instance& inst, const SearchBox& box, const GtspGuard& guard = {});

// Zero-cost cycle inside each group, outgoing arcs shifted to the cycle
// predecessor and penalized by M = 1 + total weight; offset = groups * M.
AtspInstance noon_bean(const GtspInstance& g);

// Node i becomes (3i, 3i+1, 3i+2) with zero edges 3i-3i+1-3i+2 and the arc
// i -> j carried by the edge {3i+2, 3j}.
StspInstance atsp_to_stsp(const AtspInstance& a);

// Exact optima (raw tour cost, offset not subtracted); nullopt if infeasible.
std::optional<Coord> gtsp_optimum(const GtspInstance& g);
std::optional<Coord> atsp_optimum(const AtspInstance& a, std::size_t guard = 20);
std::optional<Coord> stsp_optimum(const StspInstance& s, std::size_t guard = 72);

}  // namespace vtsp
