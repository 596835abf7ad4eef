#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "darp/instance_io.hpp"
#include "darp/solution_io.hpp"
#include "darp/construction.hpp"
#include "json.hpp"

namespace darp {
namespace {

std::string data_path(const std::string& file) { return std::string(DARP_TEST_DATA_DIR) + "/" + file; }

const char* kTiny =
    "2 2 480 3 30\n"
    "0 0.0 0.0 0 0 0 480\n"
    "1 1.0 0.0 3 1 0 60\n"
    "2 0.0 2.0 3 1 0 480\n"
    "3 4.0 0.0 3 -1 0 480\n"
    "4 0.0 6.0 3 -1 50 90\n"
    "5 0.0 0.0 0 0 0 480\n";

TEST(ParseClassic, ReadsHeaderAndNodes) {
  const Instance inst = parse_classic(kTiny, "tiny");
  EXPECT_EQ(inst.n(), 2);
  EXPECT_EQ(inst.m(), 2);
  EXPECT_EQ(inst.vehicles[1].capacity, (std::vector<int>{3}));
  EXPECT_DOUBLE_EQ(inst.vehicles[0].max_route_duration, 480.0);
  EXPECT_DOUBLE_EQ(inst.requests[0].max_ride_time, 30.0);
  EXPECT_DOUBLE_EQ(inst.requests[1].delivery_window.early, 50.0);
  EXPECT_DOUBLE_EQ(inst.t(inst.pickup_node(0), inst.delivery_node(0)), 3.0);
  EXPECT_EQ(inst.requests[0].direction, Direction::inbound);
  EXPECT_EQ(inst.requests[1].direction, Direction::outbound);
}

TEST(ParseClassic, FileMatchesString) {
  const Instance a = read_instance_file(data_path("tiny_classic.txt"));
  EXPECT_EQ(a.name, "tiny_classic");
  EXPECT_EQ(write_canonical(a), write_canonical(parse_classic(kTiny, "tiny_classic")));
}

TEST(ParseClassic, WithoutTrailingDepotCopy) {
  std::string text = kTiny;
  text.erase(text.rfind("5 0.0"));
  EXPECT_EQ(parse_classic(text).n(), 2);
}

TEST(ParseClassic, BadNumberReportsLine) {
  std::string text = kTiny;
  text.replace(text.find("4.0 0.0"), 3, "x.y");
  try {
    parse_classic(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5);
  }
}

TEST(ParseClassic, TooFewNodesIsContradictory) {
  std::string text = kTiny;
  text.replace(0, 3, "2 3");
  EXPECT_THROW(parse_classic(text), ContradictoryHeader);
}

TEST(Canonical, RoundTripIsByteIdentical) {
  Rng rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    RandomInstanceSpec spec;
    spec.n = 1 + trial % 6;
    spec.m = 1 + trial % 3;
    spec.depots = 1 + trial % 2;
    spec.heterogeneous = trial % 2 == 0;
    const Instance inst = random_instance(spec, rng);
    const std::string text = write_canonical(inst);
    const Instance back = parse_canonical(text);
    ASSERT_EQ(write_canonical(back), text) << "trial " << trial;
    EXPECT_EQ(back.requests[0].compatible_types, inst.requests[0].compatible_types);
  }
}

TEST(Canonical, SchemaErrorNamesPath) {
  Rng rng(1);
  const Instance inst = random_instance(RandomInstanceSpec{}, rng);
  auto doc = nlohmann::json::parse(write_canonical(inst));
  doc["requests"][1].erase("pickup_window");
  try {
    parse_canonical(doc.dump());
    FAIL() << "expected SchemaError";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "/requests/1/pickup_window");
  }
  doc = nlohmann::json::parse(write_canonical(inst));
  doc["vehicles"][0]["capacity"] = "three";
  try {
    parse_canonical(doc.dump());
    FAIL() << "expected SchemaError";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "/vehicles/0/capacity");
  }
  EXPECT_THROW(parse_canonical("{not json"), SchemaError);
}

TEST(Canonical, MatricesDerivedFromCoordsWhenAbsent) {
  const Instance inst = read_instance_file(data_path("third_set_style.json"));
  EXPECT_DOUBLE_EQ(inst.t(inst.pickup_node(0), inst.delivery_node(0)), 50.0);
  EXPECT_DOUBLE_EQ(inst.d(inst.pickup_node(1), inst.delivery_node(1)), 24.0);
}

TEST(Canonical, HandEncodedThirdSetStyleValidates) {
  const Instance inst = read_instance_file(data_path("third_set_style.json"));
  EXPECT_EQ(inst.m(), 4);
  EXPECT_EQ(inst.depot_count, 2);
  for (const auto& r : inst.requests) {
    EXPECT_DOUBLE_EQ(r.pickup_service, 10.0);
    const double direct = inst.t(inst.pickup_node(r.id), inst.delivery_node(r.id));
    EXPECT_DOUBLE_EQ(r.max_ride_time, 2.0 * direct);
  }
  EXPECT_FALSE(inst.compatible(0, 1));
  EXPECT_TRUE(inst.compatible(1, 1));
}

TEST(Multidepot, FourDepotsOneVehicleEach) {
  const Instance base = parse_classic(kTiny);
  Instance four = base;
  four.vehicles.clear();
  for (int v = 0; v < 4; ++v) four.vehicles.push_back({v, 0, 0, {3}, {0, 480}, 480});
  const Instance out = extend_multidepot(validate_instance(four));
  EXPECT_EQ(out.depot_count, 4);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(out.vehicles[v].depot, v);
  for (int i = 0; i < 2 * out.n(); ++i) {
    for (int j = 0; j < 2 * out.n(); ++j) {
      EXPECT_EQ(out.t(i, j), base.t(i, j));
      EXPECT_EQ(out.d(i, j), base.d(i, j));
    }
  }
  EXPECT_DOUBLE_EQ(out.t(out.depot_node(1), out.pickup_node(0)), std::hypot(1.0 - 5.0, 0.0 - 5.0));
}

TEST(Multidepot, SixVehiclesSplitTwoTwoOneOne) {
  Instance six = parse_classic(kTiny);
  six.vehicles.clear();
  for (int v = 0; v < 6; ++v) six.vehicles.push_back({v, 0, 0, {3}, {0, 480}, 480});
  const Instance out = extend_multidepot(validate_instance(six));
  std::vector<int> per_depot(4, 0);
  for (const auto& v : out.vehicles) ++per_depot[v.depot];
  EXPECT_EQ(per_depot, (std::vector<int>{2, 2, 1, 1}));
}

TEST(Heterogenize, UniformSchemeIsAllStaff) {
  Rng rng(5);
  const Instance base = parse_classic(kTiny);
  std::vector<PassengerType> types;
  const Instance out = heterogenize(base, named_scheme("U"), rng, &types);
  for (PassengerType t : types) EXPECT_EQ(t, PassengerType::staff);
  for (const auto& r : out.requests) {
    EXPECT_EQ(r.demand, (std::vector<int>{0, 0, 1, 0}));
    EXPECT_EQ(r.compatible_types, (std::vector<int>{0}));
  }
  EXPECT_EQ(out.vehicles[0].capacity, (std::vector<int>{0, 0, 3, 0}));
}

TEST(Heterogenize, WheelchairWithoutPlacesIsInfeasible) {
  Rng rng(5);
  HeterogenizeScheme scheme;
  scheme.passenger_weights = {0.0, 0.0, 0.0, 1.0};
  scheme.layouts = {{"no-wheelchair", 2, 2, 1, 0}};
  EXPECT_THROW(heterogenize(parse_classic(kTiny), scheme, rng), InfeasibleScheme);
}

TEST(Heterogenize, ProportionsWithinOne) {
  Rng rng(9);
  RandomInstanceSpec spec;
  spec.n = 23;
  spec.m = 4;
  const Instance base = random_instance(spec, rng);
  HeterogenizeScheme scheme = named_scheme("I");
  scheme.passenger_weights = {0.4, 0.3, 0.2, 0.1};
  std::vector<PassengerType> types;
  const Instance out = heterogenize(base, scheme, rng, &types);
  std::array<int, 4> counts{};
  for (PassengerType t : types) ++counts[static_cast<int>(t)];
  for (int k = 0; k < 4; ++k) {
    EXPECT_LE(std::abs(counts[k] - scheme.passenger_weights[k] * 23), 1.0) << k;
  }
  // Stretcher patients fit only the layout with a stretcher.
  for (int r = 0; r < out.n(); ++r) {
    if (types[r] == PassengerType::stretcher) EXPECT_EQ(out.requests[r].compatible_types, (std::vector<int>{0}));
    if (types[r] == PassengerType::staff) EXPECT_EQ(out.requests[r].compatible_types.size(), 2u);
  }
}

TEST(Heterogenize, NestedCapacityMatchesSeatAssignment) {
  // Layout T1 has 1 staff seat, 2 patient seats, no stretcher: two seated
  // patients and one staff member fit, three seated patients do not.
  const auto cap = layout_capacity({"T1", 1, 2, 0, 2});
  auto fits = [&](std::array<int, 4> load) {
    for (int k = 0; k < 4; ++k) {
      if (load[k] > cap[k]) return false;
    }
    return true;
  };
  const auto seated = passenger_demand(PassengerType::seated);
  const auto staff = passenger_demand(PassengerType::staff);
  std::array<int, 4> two_one{};
  std::array<int, 4> three{};
  for (int k = 0; k < 4; ++k) {
    two_one[k] = 2 * seated[k] + staff[k];
    three[k] = 3 * seated[k];
  }
  EXPECT_TRUE(fits(two_one));
  EXPECT_FALSE(fits(three));
}

TEST(Generators, ThirdSetRideLimitIsTwiceDirect) {
  Rng rng(3);
  ThirdSetSpec spec;
  spec.n = 10;
  spec.m = 4;
  const Instance inst = synthetic_third_set(spec, rng);
  EXPECT_EQ(inst.label, "synthetic-third-set");
  for (const auto& r : inst.requests) {
    EXPECT_DOUBLE_EQ(r.pickup_service, 10.0);
    EXPECT_DOUBLE_EQ(r.max_ride_time, 2.0 * inst.t(inst.pickup_node(r.id), inst.delivery_node(r.id)));
  }
}

TEST(SolutionIo, RoundTripAndVerify) {
  Rng rng(4);
  RandomInstanceSpec spec;
  spec.n = 5;
  spec.m = 2;
  const Instance inst = random_instance(spec, rng);
  const Solution s = heuristic1(inst);
  const std::string text = write_solution(inst, s);
  const Solution back = parse_solution(inst, text);
  for (int v = 0; v < inst.m(); ++v) EXPECT_EQ(back.nodes(v), s.nodes(v));
  EXPECT_EQ(verify_solution_file(inst, text).empty(), is_feasible(inst, s).feasible);
}

}  // namespace
}  // namespace darp
