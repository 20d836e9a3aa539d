#include <gtest/gtest.h>

#include "support/test_support.hpp"
#include "vtsp/configspace.hpp"
#include "vtsp/intmath.hpp"

namespace vtsp {
namespace {

using testing::Rng;

Instance fact_two(std::size_t start) {
  Instance inst;
  inst.cities = {{{0, 0}}, {{1, 0}}, {{2, 0}}};
  inst.start = start;
  return inst;
}

SearchBox wide_box() {
  SearchBox b;
  b.lo = {{-30, -30}};
  b.hi = {{30, 30}};
  b.max_speed = {{9, 9}};
  return b;
}

void expect_realizes(const Instance& inst, const Tour& tour, const Trajectory& t) {
  ASSERT_FALSE(t.configurations.empty());
  EXPECT_TRUE(is_valid_trajectory(t.configurations, inst.model));
  EXPECT_TRUE(realizes_tour(inst, tour, t.configurations));
  if (inst.params == VisitParams{}) {
    const auto targets = tour.interior_cities(inst);
    EXPECT_EQ(testing::replay_default_visits(t.configurations, targets), targets.size());
  }
}

TEST(SearchBox, MarginOverride) {
  const SearchBox b = make_search_box(fact_two(0), 0);
  EXPECT_EQ(b.lo, (Position{{0, 0}}));
  EXPECT_EQ(b.hi, (Position{{2, 0}}));
  EXPECT_EQ(b.extent(0), 3);
  EXPECT_EQ(b.extent(1), 1);
}

TEST(SearchBox, DefaultMarginFromSpread) {
  Instance inst;
  inst.cities = {{{0, 0}}, {{100, 40}}};
  const SearchBox b = make_search_box(inst);
  // ceil(2 sqrt(100)) + 2 = 22 on every side.
  EXPECT_EQ(b.lo, (Position{{-22, -22}}));
  EXPECT_EQ(b.hi, (Position{{122, 62}}));
  // 145 lattice columns: ceil(sqrt(145)) + 1.
  EXPECT_EQ(b.max_speed[0], 14);
  EXPECT_EQ(b.max_speed[1], ceil_sqrt(85) + 1);
}

TEST(SearchBox, SinglePoint) {
  Instance inst;
  inst.cities = {{{5, -5}}};
  const SearchBox b = make_search_box(inst);
  EXPECT_EQ(b.lo, (Position{{3, -7}}));
  EXPECT_EQ(b.hi, (Position{{7, -3}}));
  EXPECT_TRUE(b.contains(at_rest(inst.cities[0])));
}

TEST(TwoPoint, Examples) {
  const SearchBox box = wide_box();
  const auto m = SuccessorModel::NineSuccessor;
  EXPECT_EQ(bfs_two_point(at_rest({{0, 0}}), at_rest({{0, 0}}), box, m).cost(), 0u);
  EXPECT_EQ(bfs_two_point(at_rest({{0, 0}}), at_rest({{13, 0}}), box, m).cost(), 8u);
  EXPECT_EQ(bfs_two_point(at_rest({{0, 0}}), at_rest({{1, 1}}), box, m).cost(), 2u);
  EXPECT_EQ(bfs_two_point(at_rest({{0, 0}}), at_rest({{1, 1}}), box, SuccessorModel::FiveSuccessor)
                .cost(),
            4u);
}

TEST(TwoPoint, NotFound) {
  SearchBox box;
  box.lo = {{0, 0}};
  box.hi = {{4, 0}};
  box.max_speed = {{1, 1}};
  const Configuration from = at_rest({{0, 0}});
  EXPECT_THROW(bfs_two_point(from, {{{4, 0}}, {{2, 0}}}, box, SuccessorModel::NineSuccessor),
               InvalidArgument);
  box.max_speed = {{2, 1}};
  EXPECT_THROW(bfs_two_point(from, {{{1, 0}}, {{2, 0}}}, box, SuccessorModel::NineSuccessor),
               NotFound);
}

TEST(TwoPoint, ReversalSymmetric) {
  Rng rng(3);
  SearchBox box;
  box.lo = {{-6, -6}};
  box.hi = {{6, 6}};
  box.max_speed = {{3, 3}};
  for (int i = 0; i < 60; ++i) {
    const Configuration a{{{testing::uniform(rng, -3, 3), testing::uniform(rng, -3, 3)}},
                          {{testing::uniform(rng, -2, 2), testing::uniform(rng, -2, 2)}}};
    const Configuration b{{{testing::uniform(rng, -3, 3), testing::uniform(rng, -3, 3)}},
                          {{testing::uniform(rng, -2, 2), testing::uniform(rng, -2, 2)}}};
    if (!box.contains(reversal(a)) || !box.contains(reversal(b))) continue;
    const auto m = SuccessorModel::NineSuccessor;
    const auto fwd = bfs_distances(a, std::vector{b}, box, m)[0];
    const auto bwd = bfs_distances(reversal(b), std::vector{reversal(a)}, box, m)[0];
    EXPECT_EQ(fwd, bwd);
  }
}

TEST(TwoPoint, PathIsValid) {
  const auto t = bfs_two_point(at_rest({{0, 0}}), at_rest({{9, -4}}), wide_box(),
                               SuccessorModel::NineSuccessor);
  EXPECT_TRUE(is_valid_trajectory(t.configurations, SuccessorModel::NineSuccessor));
  EXPECT_EQ(t.configurations.back(), at_rest({{9, -4}}));
}

TEST(Ordered, FactTwo) {
  const Instance a = fact_two(0);
  const SearchBox box = make_search_box(a);
  const Tour ta = Tour::closed(0, std::vector<std::size_t>{1, 2});
  const auto t = bfs_ordered(a, ta, box);
  EXPECT_EQ(t.cost(), 6u);
  expect_realizes(a, ta, t);

  const Instance b = fact_two(1);
  const Tour tb = Tour::closed(1, std::vector<std::size_t>{2, 0});
  EXPECT_EQ(bfs_ordered(b, tb, box).cost(), 7u);
}

TEST(Ordered, StartOnly) {
  Instance inst;
  inst.cities = {{{2, 2}}};
  EXPECT_EQ(bfs_ordered(inst, Tour::closed(0, {}), make_search_box(inst)).cost(), 0u);
}

TEST(Ordered, RejectsBadTour) {
  const Instance a = fact_two(0);
  EXPECT_THROW(bfs_ordered(a, Tour{{0, 1, 0}}, make_search_box(a)), InvalidArgument);
  EXPECT_THROW(bfs_ordered(a, Tour{{1, 2, 0, 1}}, make_search_box(a)), InvalidArgument);
  EXPECT_THROW(bfs_ordered(a, Tour{{0, 1, 1, 0}}, make_search_box(a)), InvalidArgument);
}

TEST(Ordered, FromIntermediateState) {
  const Instance a = fact_two(0);
  const SearchBox box = make_search_box(a);
  const Tour ta = Tour::closed(0, std::vector<std::size_t>{1, 2});
  const auto full = bfs_ordered(a, ta, box);
  // Every prefix split of an optimal trajectory leaves an optimal remainder.
  for (std::size_t s = 0; s < full.configurations.size(); ++s) {
    std::size_t k = 0;
    const auto targets = ta.interior_cities(a);
    for (std::size_t i = 1; i <= s; ++i)
      k += advance_visits(full.configurations[i - 1], full.configurations[i],
                          std::span<const Position>(targets).subspan(k), a.params);
    const auto rest = bfs_ordered_from(a, ta, box, full.configurations[s], k);
    EXPECT_EQ(rest.cost(), full.cost() - s);
  }
}

TEST(BruteForce, FactTwo) {
  for (std::size_t start : {0u, 1u}) {
    const Instance inst = fact_two(start);
    const auto r = brute_force_vtsp(inst, make_search_box(inst));
    EXPECT_EQ(r.trajectory.cost(), start == 0 ? 6u : 7u);
    expect_realizes(inst, r.tour, r.trajectory);
  }
}

TEST(BruteForce, SingleCityAndGuard) {
  Instance inst;
  inst.cities = {{{0, 0}}};
  EXPECT_EQ(brute_force_vtsp(inst, make_search_box(inst)).trajectory.cost(), 0u);
  Rng rng(1);
  const Instance big = testing::random_instance(rng, 9, 0, 10);
  EXPECT_THROW(brute_force_vtsp(big, make_search_box(big)), GuardRefused);
}

TEST(BruteForce, EqualsPermutationMinimum) {
  Rng rng(2024);
  for (int trial = 0; trial < 12; ++trial) {
    Instance inst = testing::random_instance(rng, 4, 0, 10);
    inst.start = trial % 4;
    const SearchBox box = make_search_box(inst);
    std::size_t best = SIZE_MAX;
    for (const Tour& t : testing::all_tours(inst)) {
      const auto traj = bfs_ordered(inst, t, box);
      expect_realizes(inst, t, traj);
      best = std::min(best, traj.cost());
    }
    const auto r = brute_force_vtsp(inst, box);
    EXPECT_EQ(r.trajectory.cost(), best);
    expect_realizes(inst, r.tour, r.trajectory);
    EXPECT_EQ(bfs_ordered(inst, r.tour, box).cost(), best);
  }
}

TEST(Ordered, MonotoneInBox) {
  Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const Instance inst = testing::random_instance(rng, 3, 0, 10);
    const Tour t = testing::random_tour(rng, inst);
    const SearchBox small = make_search_box(inst, 1);
    const SearchBox large = make_search_box(inst, 5);
    std::optional<std::size_t> cs;
    try {
      cs = bfs_ordered(inst, t, small).cost();
    } catch (const NotFound&) {
    }
    const auto cl = bfs_ordered(inst, t, large).cost();
    if (cs) EXPECT_LE(cl, *cs);
    EXPECT_EQ(bfs_ordered(inst, t, make_search_box(inst)).cost(), cl);
  }
}

TEST(Ordered, SpreadLowerBound) {
  Rng rng(8);
  for (int trial = 0; trial < 15; ++trial) {
    const Instance inst = testing::random_instance(rng, 3 + trial % 2, 0, 12);
    const Tour t = testing::random_tour(rng, inst);
    const auto cost = static_cast<Coord>(bfs_ordered(inst, t, make_search_box(inst)).cost());
    for (std::size_t d = 0; d < 2; ++d) {
      Coord lo = inst.cities[0][d], hi = lo;
      for (const auto& p : inst.cities) {
        lo = std::min(lo, p[d]);
        hi = std::max(hi, p[d]);
      }
      // A closed walk covers the spread twice.
      EXPECT_GE(cost, 2 * ceil_sqrt(4 * (hi - lo)));
      EXPECT_GE(cost, ceil_sqrt(4 * (hi - lo)));
    }
  }
}

TEST(Ordered, FiveSuccessorAndParams) {
  Rng rng(99);
  for (int trial = 0; trial < 8; ++trial) {
    Instance inst = testing::random_instance(rng, 3, 0, 8);
    inst.model = trial % 2 ? SuccessorModel::FiveSuccessor : SuccessorModel::NineSuccessor;
    inst.params = {trial % 3 == 0 ? std::optional<Coord>(2) : std::nullopt, trial % 2, trial % 4 == 1};
    const SearchBox box = make_search_box(inst);
    std::size_t best = SIZE_MAX;
    for (const Tour& t : testing::all_tours(inst)) {
      const auto traj = bfs_ordered(inst, t, box);
      expect_realizes(inst, t, traj);
      best = std::min(best, traj.cost());
    }
    EXPECT_EQ(brute_force_vtsp(inst, box).trajectory.cost(), best);
  }
}

TEST(InducedTour, FromTrajectory) {
  const Instance inst = fact_two(0);
  const auto t = bfs_ordered(inst, Tour::closed(0, std::vector<std::size_t>{1, 2}),
                             make_search_box(inst));
  const auto tour = induced_tour(inst, t.configurations);
  ASSERT_TRUE(tour);
  EXPECT_EQ(tour->order, (std::vector<std::size_t>{0, 1, 2, 0}));
  const std::vector<Configuration> idle{at_rest({{0, 0}})};
  EXPECT_FALSE(induced_tour(inst, idle));
}

}  // namespace
}  // namespace vtsp
