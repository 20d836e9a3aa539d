#pragma once

// Racetrack kinematics on the integer lattice.
//
// A configuration is a (position, velocity) pair where velocity is the
// displacement that brought the vehicle to its position. A successor c' of c
// satisfies pos(c') = pos(c) + vel(c') with vel(c') - vel(c) bounded by the
// successor model. Types are dimension-generic; the solver pipeline is 2D.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vtsp/errors.hpp"

namespace vtsp {

using Coord = std::int64_t;

template <std::size_t D>
struct LatticeVec {
  static_assert(D >= 1);
  std::array<Coord, D> c{};

  constexpr Coord& operator[](std::size_t i) { return c[i]; }
  constexpr Coord operator[](std::size_t i) const { return c[i]; }

  friend constexpr LatticeVec operator+(LatticeVec a, const LatticeVec& b) {
    for (std::size_t i = 0; i < D; ++i) a.c[i] += b.c[i];
    return a;
  }
  friend constexpr LatticeVec operator-(LatticeVec a, const LatticeVec& b) {
    for (std::size_t i = 0; i < D; ++i) a.c[i] -= b.c[i];
    return a;
  }
  friend constexpr LatticeVec operator-(LatticeVec a) {
    for (auto& v : a.c) v = -v;
    return a;
  }
  friend constexpr auto operator<=>(const LatticeVec&, const LatticeVec&) = default;
};

template <std::size_t D>
constexpr Coord dot(const LatticeVec<D>& a, const LatticeVec<D>& b) {
  Coord s = 0;
  for (std::size_t i = 0; i < D; ++i) s += a[i] * b[i];
  return s;
}

template <std::size_t D>
constexpr Coord norm2(const LatticeVec<D>& a) {
  return dot(a, a);
}

template <std::size_t D>
struct BasicConfiguration {
  LatticeVec<D> pos;
  LatticeVec<D> vel;
  friend constexpr auto operator<=>(const BasicConfiguration&,
                                    const BasicConfiguration&) = default;
};

using Vec2 = LatticeVec<2>;
using Position = Vec2;
using Velocity = Vec2;
using Configuration = BasicConfiguration<2>;

enum class SuccessorModel { NineSuccessor, FiveSuccessor };

struct VisitParams {
  std::optional<Coord> nu;  // maximum visit speed; nullopt = unbounded
  Coord alpha = 0;          // maximum visit distance
  bool beta = false;        // visits only at configuration endpoints
  friend bool operator==(const VisitParams&, const VisitParams&) = default;
};

struct Instance {
  std::vector<Position> cities;
  std::size_t start = 0;
  VisitParams params;
  SuccessorModel model = SuccessorModel::NineSuccessor;

  // Throws InvalidArgument unless cities are non-empty, pairwise distinct,
  // start is in range and visit parameters are non-negative.
  void validate() const;
  std::size_t size() const { return cities.size(); }
  const Position& start_city() const { return cities[start]; }
};

// Configuration with the vehicle at rest at `p`.
constexpr Configuration at_rest(const Position& p) { return {p, Vec2{}}; }

// Velocity deltas allowed by the model, in lexicographic order.
template <std::size_t D>
std::vector<LatticeVec<D>> velocity_deltas(SuccessorModel model) {
  std::vector<LatticeVec<D>> out;
  LatticeVec<D> d;
  d.c.fill(-1);
  while (true) {
    std::size_t nonzero = 0;
    for (auto v : d.c) nonzero += v != 0;
    if (model == SuccessorModel::NineSuccessor || nonzero <= 1) out.push_back(d);
    std::size_t i = D;
    while (i > 0 && d[i - 1] == 1) d[--i] = -1;
    if (i == 0) break;
    ++d[i - 1];
  }
  return out;
}

// The 2D deltas, precomputed.
std::span<const Vec2> velocity_deltas_2d(SuccessorModel model);

template <std::size_t D>
std::vector<BasicConfiguration<D>> successors(const BasicConfiguration<D>& c,
                                              SuccessorModel model) {
  std::vector<BasicConfiguration<D>> out;
  for (const auto& delta : velocity_deltas<D>(model)) {
    auto vel = c.vel + delta;
    out.push_back({c.pos + vel, vel});
  }
  return out;
}

template <std::size_t D>
bool is_successor(const BasicConfiguration<D>& c, const BasicConfiguration<D>& next,
                  SuccessorModel model) {
  if (next.pos != c.pos + next.vel) return false;
  const auto delta = next.vel - c.vel;
  std::size_t nonzero = 0;
  for (auto v : delta.c) {
    if (v < -1 || v > 1) return false;
    nonzero += v != 0;
  }
  return model == SuccessorModel::NineSuccessor || nonzero <= 1;
}

// ((pos + vel), -vel): the configuration read as the same vector traversed in
// the opposite direction when velocity denotes the outgoing displacement.
template <std::size_t D>
constexpr BasicConfiguration<D> inverse(const BasicConfiguration<D>& c) {
  return {c.pos + c.vel, -c.vel};
}

// ((pos - vel), -vel): the backwards traversal of the vector that arrived at
// pos. Under the incoming-velocity convention used by successors() this is the
// map that makes both successor models symmetric:
//   next in successors(c)  <=>  reversal(c) in successors(reversal(next)).
template <std::size_t D>
constexpr BasicConfiguration<D> reversal(const BasicConfiguration<D>& c) {
  return {c.pos - c.vel, -c.vel};
}

// Throws InvalidArgument on an empty sequence.
bool is_valid_trajectory(std::span<const Configuration> t, SuccessorModel model);

// (reversal(c_k), ..., reversal(c_1)): the same vectors driven backwards.
std::vector<Configuration> reverse_trajectory(std::span<const Configuration> t);

// Whether the vector from pos(c) to pos(next) visits `city`. Exact integer
// arithmetic throughout.
bool segment_visits(const Configuration& c, const Configuration& next,
                    const Position& city, const VisitParams& params);

// Number of leading cities of `suffix` visited, in order, by the vector
// c -> next. With beta = false the consumed cities must appear in
// non-decreasing order along the segment.
std::size_t advance_visits(const Configuration& c, const Configuration& next,
                           std::span<const Position> suffix, const VisitParams& params);

}  // namespace vtsp
