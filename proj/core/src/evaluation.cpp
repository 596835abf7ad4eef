#include "darp/evaluation.hpp"

#include <algorithm>
#include <sstream>

namespace darp {

namespace {

double excess(double amount) { return amount > kTolerance ? amount : 0.0; }

}  // namespace

PenaltyState initial_penalties(const PenaltySeeds& seeds, Rng& rng) {
  return PenaltyState{seeds.alpha, seeds.beta, seeds.gamma, seeds.tau,
                      rng.uniform_real(kDeltaMin, kDeltaMax)};
}

PenaltyState update_penalties(const PenaltyState& state, Rng& rng) {
  const double factor = 1.0 + state.delta;
  return PenaltyState{state.alpha * factor, state.beta * factor, state.gamma * factor,
                      state.tau * factor, rng.uniform_real(kDeltaMin, kDeltaMax)};
}

ViolationVector route_violations(const Instance& instance, int vehicle,
                                 std::span<const int> nodes, const Schedule& schedule) {
  ViolationVector v;
  const auto& veh = instance.vehicles[vehicle];
  const int seats = instance.seat_count();
  for (std::size_t pos = 1; pos <= nodes.size(); ++pos) {
    const int node = nodes[pos - 1];
    const TimeWindow w = instance.window(node);
    const double b = schedule.begin[pos];
    // Under mandatory waiting B >= e, so the early term is zero; kept for
    // schedules built under other waiting policies.
    v.window += excess(b - w.late) + excess(w.early - b);
    for (int r = 0; r < seats; ++r) v.capacity += excess(schedule.load_at(pos, r) - veh.capacity[r]);
    if (instance.is_pickup(node) && schedule.partner[pos] >= 0) {
      v.ride_time += excess(schedule.ride_time[pos] - instance.requests[node].max_ride_time);
    }
  }
  v.duration = excess(schedule.duration - veh.max_route_duration);
  return v;
}

double route_distance(const Instance& instance, int vehicle, std::span<const int> nodes) {
  if (nodes.empty()) return 0.0;
  const int depot = instance.vehicle_depot_node(vehicle);
  double total = instance.d(depot, nodes.front()) + instance.d(nodes.back(), depot);
  for (std::size_t i = 1; i < nodes.size(); ++i) total += instance.d(nodes[i - 1], nodes[i]);
  return total;
}

RouteCost evaluate_route(const Instance& instance, int vehicle, std::span<const int> nodes,
                         Scheduler scheduler) {
  thread_local Schedule scratch;
  if (scheduler == Scheduler::eight_step) {
    eight_step_evaluate(instance, vehicle, nodes, scratch);
  } else {
    compute_schedule(instance, vehicle, nodes, instance.vehicles[vehicle].depot_window.early, {},
                     scratch);
  }
  return RouteCost{route_distance(instance, vehicle, nodes),
                   route_violations(instance, vehicle, nodes, scratch)};
}

const RouteCost& route_cost(const Instance& instance, const Solution& solution, int v) {
  if (!solution.cached(v)) solution.store(v, evaluate_route(instance, v, solution.nodes(v)));
  return *solution.cached(v);
}

double cost_f1(const Instance& instance, const Solution& solution) {
  double total = 0.0;
  for (int v = 0; v < solution.size(); ++v) total += route_cost(instance, solution, v).distance;
  return total;
}

ViolationVector violations(const Instance& instance, const Solution& solution) {
  ViolationVector total;
  for (int v = 0; v < solution.size(); ++v) total += route_cost(instance, solution, v).violations;
  return total;
}

double evaluate(double f1, const ViolationVector& v, const PenaltyState& p) {
  return f1 + p.alpha * v.ride_time + p.beta * v.window + p.gamma * v.capacity +
         p.tau * v.duration;
}

double evaluate(const Instance& instance, const Solution& solution, const PenaltyState& penalties) {
  return evaluate(cost_f1(instance, solution), violations(instance, solution), penalties);
}

bool violation_free(const Instance& instance, const Solution& solution) {
  return violations(instance, solution).zero();
}

const char* to_string(Constraint c) {
  switch (c) {
    case Constraint::coverage: return "Coverage(1)";
    case Constraint::pairing: return "Pairing(2)";
    case Constraint::flow: return "Flow(3-4)";
    case Constraint::capacity: return "Capacity(6b)";
    case Constraint::time_window: return "TimeWindow(15)";
    case Constraint::ride_time: return "RideTime(14)";
    case Constraint::duration: return "Duration(16)";
    case Constraint::depot_span: return "DepotSpan(17)";
    case Constraint::compatibility: return "Compatibility(19)";
  }
  return "Unknown";
}

bool FeasibilityReport::has(Constraint c) const {
  return std::find(violated.begin(), violated.end(), c) != violated.end();
}

FeasibilityReport is_feasible(const Instance& instance, const Solution& solution) {
  FeasibilityReport report;
  auto flag = [&report](Constraint c, const std::string& detail) {
    report.feasible = false;
    if (!report.has(c)) report.violated.push_back(c);
    report.details.push_back(std::string(to_string(c)) + ": " + detail);
  };

  const int n = instance.n();
  if (solution.size() != instance.m()) {
    flag(Constraint::flow, "solution has " + std::to_string(solution.size()) + " routes for " +
                               std::to_string(instance.m()) + " vehicles");
    return report;
  }

  std::vector<int> pickup_route(n, -1), delivery_route(n, -1);
  std::vector<int> pickup_seen(n, 0), delivery_seen(n, 0);
  for (int v = 0; v < solution.size(); ++v) {
    const Route& route = solution.route(v);
    if (route.vehicle != v) flag(Constraint::flow, "route " + std::to_string(v) + " names vehicle " +
                                                       std::to_string(route.vehicle));
    for (std::size_t pos = 0; pos < route.nodes.size(); ++pos) {
      const int node = route.nodes[pos];
      if (node < 0 || node >= 2 * n) {
        flag(Constraint::flow, "route " + std::to_string(v) + " visits invalid node " +
                                   std::to_string(node));
        continue;
      }
      const int r = instance.request_of(node);
      if (instance.is_pickup(node)) {
        ++pickup_seen[r];
        pickup_route[r] = v;
      } else {
        ++delivery_seen[r];
        delivery_route[r] = v;
        if (pickup_route[r] != v) flag(Constraint::pairing, "delivery of request " + std::to_string(r) +
                                                                " precedes its pickup or is on another route");
      }
      if (!instance.compatible(r, v)) {
        flag(Constraint::compatibility, "request " + std::to_string(r) + " on vehicle " +
                                            std::to_string(v));
      }
    }
  }
  for (int r = 0; r < n; ++r) {
    if (pickup_seen[r] != 1 || delivery_seen[r] != 1) {
      flag(Constraint::coverage, "request " + std::to_string(r) + " served " +
                                     std::to_string(pickup_seen[r]) + "/" +
                                     std::to_string(delivery_seen[r]) + " times");
    } else if (pickup_route[r] != delivery_route[r]) {
      flag(Constraint::pairing, "request " + std::to_string(r) + " split across vehicles");
    }
  }
  if (!report.feasible) return report;

  Schedule s;
  for (int v = 0; v < solution.size(); ++v) {
    const auto& nodes = solution.nodes(v);
    const auto& veh = instance.vehicles[v];
    eight_step_evaluate(instance, v, nodes, s);
    std::ostringstream where;
    where << "vehicle " << v;
    for (std::size_t pos = 1; pos <= nodes.size(); ++pos) {
      const int node = nodes[pos - 1];
      const TimeWindow w = instance.window(node);
      if (s.begin[pos] > w.late + kTolerance || s.begin[pos] < w.early - kTolerance) {
        flag(Constraint::time_window, where.str() + " node " + std::to_string(node));
      }
      for (int r = 0; r < instance.seat_count(); ++r) {
        if (s.load_at(pos, r) > veh.capacity[r]) {
          flag(Constraint::capacity, where.str() + " node " + std::to_string(node) + " seat " +
                                         std::to_string(r));
        }
      }
      if (instance.is_pickup(node)) {
        const auto& req = instance.requests[node];
        const double lower = instance.t(node, instance.delivery_node(node)) + req.delivery_service;
        const double ride = s.ride_time[pos];
        if (ride > req.max_ride_time + kTolerance || ride < lower - kTolerance) {
          flag(Constraint::ride_time, "request " + std::to_string(node));
        }
      }
    }
    if (s.duration > veh.max_route_duration + kTolerance) flag(Constraint::duration, where.str());
    if (s.duration < -kTolerance) flag(Constraint::depot_span, where.str());
  }
  return report;
}

}  // namespace darp
