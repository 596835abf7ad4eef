#include <gtest/gtest.h>

#include <numeric>

#include "darp/evaluation.hpp"
#include "darp/schedule.hpp"
#include "test_support.hpp"

namespace darp {
namespace {

using testing::make_instance;
using testing::ToyRequest;
using testing::ToyVehicle;

TEST(Schedule, EmptyRouteHasZeroDuration) {
  const Instance inst = make_instance({{0, 0}}, {ToyRequest{{1, 0}, {2, 0}}}, {ToyVehicle{}});
  const Schedule s = earliest_schedule(inst, Route{0, {}}, 0.0);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_DOUBLE_EQ(s.duration, 0.0);
}

TEST(Schedule, ForcedByRecursion) {
  ToyRequest r{{10, 0}, {20, 0}};
  r.pickup_window = {20, 100};
  r.service = 5;
  const Instance inst = make_instance({{0, 0}}, {r}, {ToyVehicle{}});
  const Schedule s = earliest_schedule(inst, Route{0, {0, 1}}, 0.0);
  EXPECT_DOUBLE_EQ(s.arrival[1], 10.0);
  EXPECT_DOUBLE_EQ(s.begin[1], 20.0);
  EXPECT_DOUBLE_EQ(s.arrival[2], 35.0);
  EXPECT_DOUBLE_EQ(s.ride_time[1], s.begin[2] + 5.0 - 25.0);
  EXPECT_DOUBLE_EQ(s.waiting(1), 10.0);
}

TEST(Schedule, MatchesExactReplayOnRandomRoutes) {
  Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rr = testing::random_route(rng, 3);
    const double depart = rng.uniform_real(0.0, 60.0);
    const Schedule s = earliest_schedule(rr.instance, Route{0, rr.nodes}, depart);
    const auto exact = testing::replay_exact(rr.instance, 0, rr.nodes, depart);
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
      EXPECT_NEAR(s.arrival[pos], exact.arrival[pos], 1e-9);
      EXPECT_NEAR(s.begin[pos], exact.begin[pos], 1e-9);
      EXPECT_NEAR(s.departure[pos], exact.departure[pos], 1e-9);
    }
  }
}

TEST(Schedule, HoldsMatchExactReplay) {
  Rng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const auto rr = testing::random_route(rng, 3);
    std::vector<double> holds(rr.nodes.size() + 2, 0.0);
    for (auto& h : holds) h = rng.uniform_real(0.0, 150.0);
    Schedule s;
    compute_schedule(rr.instance, 0, rr.nodes, 0.0, holds, s);
    const auto exact = testing::replay_exact(rr.instance, 0, rr.nodes, 0.0, holds);
    for (std::size_t pos = 0; pos < s.size(); ++pos) EXPECT_NEAR(s.begin[pos], exact.begin[pos], 1e-9);
  }
}

TEST(Schedule, LoadsReturnToZeroAndRideIdentityHolds) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rr = testing::random_route(rng, 4);
    const Schedule s = eight_step_evaluate(rr.instance, Route{0, rr.nodes});
    const std::size_t last = s.size() - 1;
    EXPECT_EQ(s.load_at(last, 0), 0);
    for (std::size_t pos = 1; pos < last; ++pos) {
      const int node = rr.nodes[pos - 1];
      if (!rr.instance.is_pickup(node)) continue;
      const std::size_t d = s.partner[pos];
      const double st_p = rr.instance.service_time(node);
      const double st_d = rr.instance.service_time(rr.nodes[d - 1]);
      EXPECT_NEAR(s.ride_time[pos], s.begin[d] + st_d - (s.begin[pos] + st_p), 1e-9);
    }
  }
}

TEST(ForwardSlack, LastNodeAtItsDeadlineHasNone) {
  ToyRequest r{{10, 0}, {20, 0}};
  r.delivery_window = {0, 20};
  const Instance inst = make_instance({{0, 0}}, {r}, {ToyVehicle{}});
  const Schedule s = earliest_schedule(inst, Route{0, {0, 1}}, 0.0);
  ASSERT_DOUBLE_EQ(s.begin[2], 20.0);
  EXPECT_DOUBLE_EQ(forward_time_slack(inst, Route{0, {0, 1}}, s, 2), 0.0);
}

TEST(ForwardSlack, SingleNodeWindowBinds) {
  ToyRequest r{{10, 0}, {20, 0}};
  r.pickup_window = {40, 70};
  const Instance inst = make_instance({{0, 0}}, {r}, {ToyVehicle{}});
  // Only the pickup is on the route: a partial route as used by local search.
  const Schedule s = earliest_schedule(inst, Route{0, {0}}, 0.0);
  ASSERT_DOUBLE_EQ(s.begin[1], 40.0);
  EXPECT_DOUBLE_EQ(forward_time_slack(inst, Route{0, {0}}, s, 1), 30.0);
}

TEST(ForwardSlack, MatchesBruteForceOnInterleavedRoutes) {
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const auto rr = testing::random_route(rng, 2);
    const Schedule s = earliest_schedule(rr.instance, Route{0, rr.nodes}, rng.uniform_real(0, 30));
    for (std::size_t pos = 0; pos <= rr.nodes.size(); ++pos) {
      const double f = forward_time_slack(rr.instance, rr.nodes, s, pos);
      const double brute = testing::brute_force_slack(rr.instance, 0, rr.nodes, s, pos, 1e-7);
      EXPECT_NEAR(f, brute, 1e-6) << "trial " << trial << " position " << pos;
    }
  }
}

TEST(EightStep, NoWaitingMeansEarliestSchedule) {
  ToyRequest r{{10, 0}, {20, 0}};
  const Instance inst = make_instance({{0, 0}}, {r}, {ToyVehicle{}});
  const Route route{0, {0, 1}};
  const Schedule a = earliest_schedule(inst, route, 0.0);
  const Schedule b = eight_step_evaluate(inst, route);
  EXPECT_EQ(a.begin, b.begin);
  EXPECT_DOUBLE_EQ(a.duration, b.duration);
}

TEST(EightStep, LateDepartureRemovesWaiting) {
  ToyRequest r{{10, 0}, {20, 0}};
  r.pickup_window = {100, 120};
  r.service = 2;
  const Instance inst = make_instance({{0, 0}}, {r}, {ToyVehicle{}});
  const Schedule s = eight_step_evaluate(inst, Route{0, {0, 1}});
  EXPECT_NEAR(s.duration, 10 + 2 + 10 + 2 + 20, 1e-9);
  EXPECT_NEAR(s.start_time(), 90.0, 1e-9);
}

TEST(EightStep, DominatesEarliestAndMatchesCoarseGrid) {
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const auto rr = testing::random_route(rng, 4);
    const Route route{0, rr.nodes};
    const Schedule early = earliest_schedule(rr.instance, route, 0.0);
    const Schedule eight = eight_step_evaluate(rr.instance, route);
    EXPECT_LE(eight.duration, early.duration + 1e-9);
    EXPECT_LE(testing::raw_window_excess(rr.instance, rr.nodes, eight),
              testing::raw_window_excess(rr.instance, rr.nodes, early) + 1e-9);
    const double grid = testing::grid_min_duration(rr.instance, 0, rr.nodes, 1.0);
    EXPECT_LE(eight.duration, grid + 1e-9);
    EXPECT_GE(eight.duration, grid - 1.0 - 1e-9);
  }
}

}  // namespace
}  // namespace darp
