#include "darp/construction.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace darp {

namespace {

constexpr double kTieEpsilon = 1e-9;

}  // namespace

Insertion best_insertion(const Instance& instance, const Route& route, int request,
                         const PenaltyState& penalties, Scheduler scheduler) {
  if (!instance.compatible(request, route.vehicle)) {
    throw IncompatibleError("Incompatible: request " + std::to_string(request) +
                            " cannot ride vehicle " + std::to_string(route.vehicle));
  }
  const double before =
      penalized(evaluate_route(instance, route.vehicle, route.nodes, scheduler), penalties);
  const int k = static_cast<int>(route.nodes.size());
  const int pickup = instance.pickup_node(request);
  const int delivery = instance.delivery_node(request);

  Insertion best;
  double best_value = std::numeric_limits<double>::infinity();
  std::vector<int> candidate;
  candidate.reserve(k + 2);
  for (int i = 0; i <= k; ++i) {
    for (int j = i + 1; j <= k + 1; ++j) {
      candidate.clear();
      candidate.insert(candidate.end(), route.nodes.begin(), route.nodes.begin() + i);
      candidate.push_back(pickup);
      candidate.insert(candidate.end(), route.nodes.begin() + i, route.nodes.begin() + (j - 1));
      candidate.push_back(delivery);
      candidate.insert(candidate.end(), route.nodes.begin() + (j - 1), route.nodes.end());
      const RouteCost cost = evaluate_route(instance, route.vehicle, candidate, scheduler);
      const double value = penalized(cost, penalties);
      if (value < best_value - kTieEpsilon) {
        best_value = value;
        best = Insertion{i, j, value - before, cost};
      }
    }
  }
  return best;
}

Insertion insert_best(const Instance& instance, Solution& solution, int v, int request,
                      const PenaltyState& penalties, Scheduler scheduler) {
  const Insertion ins = best_insertion(instance, solution.route(v), request, penalties, scheduler);
  std::vector<int> nodes = solution.nodes(v);
  insert_request(instance, nodes, request, ins.pickup_pos, ins.delivery_pos);
  if (scheduler == Scheduler::eight_step) {
    solution.set_nodes(v, std::move(nodes), ins.cost);
  } else {
    solution.set_nodes(v, std::move(nodes));
  }
  return ins;
}

Solution heuristic1(const Instance& instance) {
  const int n = instance.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return instance.requests[a].pickup_window.early < instance.requests[b].pickup_window.early;
  });

  Solution solution(instance.m());
  for (int r : order) {
    const int pickup = instance.pickup_node(r);
    const int delivery = instance.delivery_node(r);

    std::vector<std::pair<double, int>> ranked;
    for (int v = 0; v < instance.m(); ++v) {
      if (!instance.compatible(r, v)) continue;
      const int depot = instance.vehicle_depot_node(v);
      const auto& nodes = solution.nodes(v);
      const int last = nodes.empty() ? depot : nodes.back();
      ranked.emplace_back(0.5 * (instance.d(last, pickup) + instance.d(delivery, depot)), v);
    }
    std::sort(ranked.begin(), ranked.end());

    bool placed = false;
    for (const auto& [score, v] : ranked) {
      std::vector<int> nodes = solution.nodes(v);
      nodes.push_back(pickup);
      nodes.push_back(delivery);
      const RouteCost& old_cost = route_cost(instance, solution, v);
      const RouteCost new_cost = evaluate_route(instance, v, nodes);
      if (new_cost.violations.window <= old_cost.violations.window + kTolerance &&
          new_cost.violations.duration <= old_cost.violations.duration + kTolerance) {
        solution.set_nodes(v, std::move(nodes), new_cost);
        placed = true;
        break;
      }
    }
    if (placed) continue;

    // Fallback: smallest increase in route length, windows ignored.
    int chosen = -1;
    double smallest = std::numeric_limits<double>::infinity();
    for (int v = 0; v < instance.m(); ++v) {
      if (!instance.compatible(r, v)) continue;
      const auto& nodes = solution.nodes(v);
      const int depot = instance.vehicle_depot_node(v);
      const int last = nodes.empty() ? depot : nodes.back();
      const double increase = instance.d(last, pickup) + instance.d(pickup, delivery) +
                              instance.d(delivery, depot) - instance.d(last, depot);
      if (increase < smallest - kTieEpsilon) {
        smallest = increase;
        chosen = v;
      }
    }
    std::vector<int> nodes = solution.nodes(chosen);
    nodes.push_back(pickup);
    nodes.push_back(delivery);
    solution.set_nodes(chosen, std::move(nodes));
  }
  return solution;
}

Solution greedy_insertion_pass(const Instance& instance, std::span<const int> order,
                               const PenaltyState& penalties) {
  Solution solution(instance.m());
  for (int r : order) {
    int chosen = -1;
    Insertion best;
    for (int v = 0; v < instance.m(); ++v) {
      if (!instance.compatible(r, v)) continue;
      const Insertion ins = best_insertion(instance, solution.route(v), r, penalties);
      if (chosen < 0 || ins.delta < best.delta - kTieEpsilon) {
        chosen = v;
        best = ins;
      }
    }
    std::vector<int> nodes = solution.nodes(chosen);
    insert_request(instance, nodes, r, best.pickup_pos, best.delivery_pos);
    solution.set_nodes(chosen, std::move(nodes), best.cost);
  }
  return solution;
}

Solution heuristic2(const Instance& instance, const Rng& rng, const PenaltyState& penalties,
                    int trials) {
  std::vector<int> order(instance.n());
  Solution best(instance.m());
  double best_value = std::numeric_limits<double>::infinity();
  for (int pass = 0; pass < trials; ++pass) {
    Rng stream = rng.split(static_cast<std::uint64_t>(pass));
    std::iota(order.begin(), order.end(), 0);
    stream.shuffle(order);
    Solution candidate = greedy_insertion_pass(instance, order, penalties);
    const double value = evaluate(instance, candidate, penalties);
    if (value < best_value - kTieEpsilon) {
      best_value = value;
      best = std::move(candidate);
    }
  }
  return best;
}

}  // namespace darp
