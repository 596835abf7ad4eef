#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <numeric>

#include "darp/construction.hpp"
#include "darp/instance_io.hpp"
#include "test_support.hpp"

namespace darp {
namespace {

using testing::make_instance;
using testing::ToyRequest;
using testing::ToyVehicle;

const PenaltyState kPenalties{100.0, 1.0, 10000.0, 1.0, 0.05};

TEST(BestInsertion, EmptyRouteHasOnePlacement) {
  const Instance inst = make_instance({{0, 0}}, {ToyRequest{{3, 4}, {6, 8}}}, {ToyVehicle{}});
  const Insertion ins = best_insertion(inst, Route{0, {}}, 0, kPenalties);
  EXPECT_EQ(ins.pickup_pos, 0);
  EXPECT_EQ(ins.delivery_pos, 1);
  EXPECT_NEAR(ins.cost.distance, 5 + 5 + 10, 1e-9);
  EXPECT_NEAR(ins.delta, 20.0, 1e-9);
}

TEST(BestInsertion, IncompatibleThrows) {
  ToyRequest r{{3, 4}, {6, 8}};
  r.types = {1};
  ToyVehicle a, b;
  b.type = 1;
  const Instance inst = make_instance({{0, 0}}, {r}, {a, b});
  EXPECT_THROW(best_insertion(inst, Route{0, {}}, 0, kPenalties), IncompatibleError);
}

TEST(BestInsertion, MatchesEnumerationOfAllPlacements) {
  Rng rng(31);
  RandomInstanceSpec spec;
  spec.n = 4;
  spec.m = 1;
  for (int trial = 0; trial < 30; ++trial) {
    const Instance inst = random_instance(spec, rng);
    const std::vector<int> base = testing::random_order(inst, std::vector<int>{0, 1, 2}, rng);
    const Insertion ins = best_insertion(inst, Route{0, base}, 3, kPenalties);

    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= static_cast<int>(base.size()); ++i) {
      for (int j = i + 1; j <= static_cast<int>(base.size()) + 1; ++j) {
        std::vector<int> cand = base;
        cand.insert(cand.begin() + i, inst.pickup_node(3));
        cand.insert(cand.begin() + j, inst.delivery_node(3));
        best = std::min(best, penalized(evaluate_route(inst, 0, cand), kPenalties));
      }
    }
    EXPECT_NEAR(penalized(ins.cost, kPenalties), best, 1e-9);
    std::vector<int> applied = base;
    insert_request(inst, applied, 3, ins.pickup_pos, ins.delivery_pos);
    EXPECT_NEAR(penalized(evaluate_route(inst, 0, applied), kPenalties), best, 1e-9);
  }
}

TEST(Heuristic1, SingleRequestSingleVehicle) {
  const Instance inst = make_instance({{0, 0}}, {ToyRequest{{3, 4}, {6, 8}}}, {ToyVehicle{}});
  const Solution s = heuristic1(inst);
  EXPECT_EQ(s.nodes(0), (std::vector<int>{0, 1}));
}

TEST(Heuristic1, AppendsInEarliestPickupOrderToNearestRoute) {
  ToyRequest near_a{{1, 0}, {2, 0}};
  near_a.pickup_window = {10, 400};
  ToyRequest near_b{{0, 50}, {0, 51}};
  near_b.pickup_window = {20, 400};
  ToyRequest first{{2, 0}, {3, 0}};
  first.pickup_window = {0, 400};
  ToyVehicle a, b;
  b.depot = 1;
  const Instance inst = make_instance({{0, 0}, {0, 50}}, {near_a, near_b, first}, {a, b});
  const Solution s = heuristic1(inst);
  EXPECT_EQ(s.nodes(0), (std::vector<int>{2, 5, 0, 3}));
  EXPECT_EQ(s.nodes(1), (std::vector<int>{1, 4}));
}

TEST(Heuristic1, SkipsRoutesWhereAppendingBreaksAWindow) {
  // Vehicle 0 ranks first for request 1 but reaches it too late after request 0.
  ToyRequest a{{50, 0}, {60, 0}};
  a.pickup_window = {0, 100};
  ToyRequest b{{1, 0}, {2, 0}};
  b.pickup_window = {10, 50};
  ToyVehicle v0, v1;
  v1.depot = 1;
  const Instance inst = make_instance({{0, 0}, {0, 40}}, {a, b}, {v0, v1});
  const Solution s = heuristic1(inst);
  EXPECT_EQ(s.nodes(0), (std::vector<int>{0, 2}));
  EXPECT_EQ(s.nodes(1), (std::vector<int>{1, 3}));
}

TEST(Heuristic1, CoversEveryRequestCompatibly) {
  Rng rng(12);
  RandomInstanceSpec spec;
  spec.n = 8;
  spec.m = 3;
  spec.heterogeneous = true;
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = random_instance(spec, rng);
    EXPECT_TRUE(testing::structurally_valid(inst, heuristic1(inst)));
  }
}

TEST(Heuristic2, EqualsBestReplayedPass) {
  Rng gen(3);
  RandomInstanceSpec spec;
  spec.n = 3;
  spec.m = 2;
  const Instance inst = random_instance(spec, gen);
  const Rng rng(17);
  const Solution s = heuristic2(inst, rng, kPenalties, 1000);

  double best = std::numeric_limits<double>::infinity();
  for (int pass = 0; pass < 1000; ++pass) {
    Rng stream = rng.split(static_cast<std::uint64_t>(pass));
    std::vector<int> order(3);
    std::iota(order.begin(), order.end(), 0);
    stream.shuffle(order);
    best = std::min(best, evaluate(inst, greedy_insertion_pass(inst, order, kPenalties), kPenalties));
  }
  EXPECT_NEAR(evaluate(inst, s, kPenalties), best, 1e-9);

  // With 1000 passes over 3 requests every order is drawn, so the result is
  // also the best over all six permutations.
  std::vector<int> perm = {0, 1, 2};
  double best_perm = std::numeric_limits<double>::infinity();
  do {
    best_perm = std::min(best_perm, evaluate(inst, greedy_insertion_pass(inst, perm, kPenalties), kPenalties));
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_NEAR(evaluate(inst, s, kPenalties), best_perm, 1e-9);
}

}  // namespace
}  // namespace darp
