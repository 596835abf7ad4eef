#include "darp/solution_io.hpp"

#include <cmath>
#include <sstream>

#include "darp/instance_io.hpp"
#include "json.hpp"

namespace darp {

using nlohmann::json;

std::string write_solution(const Instance& instance, const Solution& solution) {
  json doc;
  doc["format"] = kSolutionFormat;
  doc["version"] = 1;
  doc["instance"] = instance.name;
  doc["f1"] = cost_f1(instance, solution);
  doc["feasible"] = is_feasible(instance, solution).feasible;
  json routes = json::array();
  for (int v = 0; v < solution.size(); ++v) {
    const Schedule s = eight_step_evaluate(instance, solution.route(v));
    routes.push_back({{"vehicle", v},
                      {"nodes", solution.nodes(v)},
                      {"schedule",
                       {{"arrival", s.arrival}, {"begin", s.begin}, {"departure", s.departure}}}});
  }
  doc["routes"] = routes;
  return doc.dump(1) + "\n";
}

namespace {

json parse_doc(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != kSolutionFormat) {
    throw SchemaError("/format", "expected \"" + std::string(kSolutionFormat) + "\"");
  }
  if (!doc.contains("routes") || !doc["routes"].is_array()) {
    throw SchemaError("/routes", "expected an array");
  }
  return doc;
}

}  // namespace

Solution parse_solution(const Instance& instance, std::string_view text) {
  const json doc = parse_doc(text);
  Solution solution(instance.m());
  const json& routes = doc["routes"];
  for (std::size_t i = 0; i < routes.size(); ++i) {
    const std::string path = "/routes/" + std::to_string(i);
    const json& r = routes[i];
    if (!r.contains("vehicle") || !r["vehicle"].is_number_integer()) {
      throw SchemaError(path + "/vehicle", "expected an integer");
    }
    const int v = r["vehicle"].get<int>();
    if (v < 0 || v >= instance.m()) throw SchemaError(path + "/vehicle", "no such vehicle");
    if (!r.contains("nodes") || !r["nodes"].is_array()) {
      throw SchemaError(path + "/nodes", "expected an array");
    }
    std::vector<int> nodes;
    for (std::size_t k = 0; k < r["nodes"].size(); ++k) {
      const json& node = r["nodes"][k];
      if (!node.is_number_integer()) {
        throw SchemaError(path + "/nodes/" + std::to_string(k), "expected an integer");
      }
      nodes.push_back(node.get<int>());
    }
    solution.set_nodes(v, std::move(nodes));
  }
  return solution;
}

std::vector<std::string> verify_solution_file(const Instance& instance, std::string_view text) {
  std::vector<std::string> problems;
  const Solution solution = parse_solution(instance, text);
  const FeasibilityReport report = is_feasible(instance, solution);
  problems.insert(problems.end(), report.details.begin(), report.details.end());

  const json doc = parse_doc(text);
  auto fail = [&problems](int v, const std::string& what) {
    problems.push_back("stored schedule, vehicle " + std::to_string(v) + ": " + what);
  };
  for (const json& r : doc["routes"]) {
    const int v = r["vehicle"].get<int>();
    const auto& nodes = solution.nodes(v);
    if (!r.contains("schedule")) {
      fail(v, "missing");
      continue;
    }
    const json& sched = r["schedule"];
    std::vector<double> arrival, begin, departure;
    try {
      arrival = sched.at("arrival").get<std::vector<double>>();
      begin = sched.at("begin").get<std::vector<double>>();
      departure = sched.at("departure").get<std::vector<double>>();
    } catch (const json::exception&) {
      fail(v, "arrival/begin/departure arrays required");
      continue;
    }
    const std::size_t k = nodes.size();
    if (arrival.size() != k + 2 || begin.size() != k + 2 || departure.size() != k + 2) {
      fail(v, "expected " + std::to_string(k + 2) + " entries per array");
      continue;
    }
    const auto& veh = instance.vehicles[v];
    const int depot = instance.vehicle_depot_node(v);
    auto node_at = [&](std::size_t pos) { return pos == 0 || pos == k + 1 ? depot : nodes[pos - 1]; };

    if (begin[0] < veh.depot_window.early - kTolerance) fail(v, "leaves the depot too early");
    for (std::size_t pos = 0; pos < k + 2; ++pos) {
      const int node = node_at(pos);
      const double service = pos == 0 || pos == k + 1 ? 0.0 : instance.service_time(node);
      if (std::abs(departure[pos] - begin[pos] - service) > kTolerance) {
        fail(v, "departure != begin + service at position " + std::to_string(pos));
      }
      if (pos > 0) {
        const double expected = departure[pos - 1] + instance.t(node_at(pos - 1), node);
        if (std::abs(arrival[pos] - expected) > kTolerance) {
          fail(v, "arrival inconsistent with travel time at position " + std::to_string(pos));
        }
        if (begin[pos] < arrival[pos] - kTolerance) {
          fail(v, "service begins before arrival at position " + std::to_string(pos));
        }
      }
      if (pos >= 1 && pos <= k) {
        const TimeWindow w = instance.window(node);
        if (begin[pos] < w.early - kTolerance || begin[pos] > w.late + kTolerance) {
          fail(v, "time window missed at node " + std::to_string(node));
        }
      }
    }
    std::vector<int> load(instance.seat_count(), 0);
    for (std::size_t pos = 1; pos <= k; ++pos) {
      const int node = nodes[pos - 1];
      for (int s = 0; s < instance.seat_count(); ++s) {
        load[s] += instance.load_delta(node, s);
        if (load[s] > veh.capacity[s]) fail(v, "capacity exceeded at node " + std::to_string(node));
      }
      if (instance.is_pickup(node)) {
        for (std::size_t q = pos + 1; q <= k; ++q) {
          if (nodes[q - 1] != instance.delivery_node(node)) continue;
          const double ride = departure[q] - departure[pos];
          if (ride > instance.requests[node].max_ride_time + kTolerance) {
            fail(v, "ride time exceeded for request " + std::to_string(node));
          }
        }
      }
    }
    if (k > 0 && arrival[k + 1] - begin[0] > veh.max_route_duration + kTolerance) {
      fail(v, "route duration exceeded");
    }
  }
  return problems;
}

}  // namespace darp
