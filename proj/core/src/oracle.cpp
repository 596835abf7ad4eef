#include "darp/oracle.hpp"

#include <limits>
#include <map>
#include <stdexcept>

#include "darp/evaluation.hpp"

namespace darp {

std::vector<std::vector<int>> enumerate_route_orders(const Instance& instance,
                                                     std::span<const int> requests) {
  const int k = static_cast<int>(requests.size());
  if (k > 5) throw std::invalid_argument("enumerate_route_orders: at most 5 requests");
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::vector<int> state(k, 0);  // 0 waiting, 1 on board, 2 delivered
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == 2 * k) {
      out.push_back(current);
      return;
    }
    for (int i = 0; i < k; ++i) {
      if (state[i] == 2) continue;
      const int r = requests[i];
      current.push_back(state[i] == 0 ? instance.pickup_node(r) : instance.delivery_node(r));
      ++state[i];
      self(self);
      --state[i];
      current.pop_back();
    }
  };
  rec(rec);
  return out;
}

bool route_schedulable(const Instance& instance, int vehicle, std::span<const int> nodes) {
  // Variables: 0 = time origin, 1 = depot departure, 2..k+1 = service
  // begin at each node, k+2 = return arrival.
  const int k = static_cast<int>(nodes.size());
  const int size = k + 3;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(size * size, inf);
  auto at = [&](int i, int j) -> double& { return dist[i * size + j]; };
  for (int i = 0; i < size; ++i) at(i, i) = 0.0;
  // x_j - x_i <= c
  auto edge = [&](int i, int j, double c) { at(i, j) = std::min(at(i, j), c); };

  const auto& veh = instance.vehicles[vehicle];
  const int depot = instance.vehicle_depot_node(vehicle);
  auto node_of = [&](int var) { return var == 1 || var == k + 2 ? depot : nodes[var - 2]; };
  auto service = [&](int var) { return var == 1 || var == k + 2 ? 0.0 : instance.service_time(node_of(var)); };

  edge(1, 0, -veh.depot_window.early);
  for (int var = 2; var <= k + 2; ++var) {
    // Earliest arrival: x_var >= x_prev + service(prev) + t(prev, var).
    edge(var, var - 1, -(service(var - 1) + instance.t(node_of(var - 1), node_of(var))));
  }
  for (int var = 2; var <= k + 1; ++var) {
    const TimeWindow w = instance.window(node_of(var));
    edge(var, 0, -w.early);
    edge(0, var, w.late);
  }
  for (int var = 2; var <= k + 1; ++var) {
    const int node = node_of(var);
    if (!instance.is_pickup(node)) continue;
    for (int other = var + 1; other <= k + 1; ++other) {
      if (node_of(other) != instance.delivery_node(node)) continue;
      // (x_d + st_d) - (x_p + st_p) <= T
      edge(var, other, instance.requests[node].max_ride_time + service(var) - service(other));
    }
  }
  edge(1, k + 2, veh.max_route_duration);

  for (int via = 0; via < size; ++via) {
    for (int i = 0; i < size; ++i) {
      if (at(i, via) == inf) continue;
      for (int j = 0; j < size; ++j) {
        if (at(via, j) == inf) continue;
        at(i, j) = std::min(at(i, j), at(i, via) + at(via, j));
      }
    }
  }
  for (int i = 0; i < size; ++i) {
    if (at(i, i) < -kTolerance) return false;
  }
  return true;
}

const char* to_string(OracleStatus status) {
  switch (status) {
    case OracleStatus::optimal: return "optimal";
    case OracleStatus::infeasible: return "infeasible";
    case OracleStatus::too_large: return "too_large";
  }
  return "?";
}

namespace {

struct RouteBest {
  bool feasible = false;
  double cost = 0.0;
  std::vector<int> nodes;
  bool exact_feasible = false;
  double exact_cost = 0.0;
};

bool capacity_ok(const Instance& instance, int vehicle, std::span<const int> nodes) {
  std::vector<int> load(instance.seat_count(), 0);
  for (int node : nodes) {
    for (int s = 0; s < instance.seat_count(); ++s) {
      load[s] += instance.load_delta(node, s);
      if (load[s] > instance.vehicles[vehicle].capacity[s]) return false;
    }
  }
  return true;
}

}  // namespace

OracleResult solve_exact(const Instance& instance, int limit) {
  OracleResult result;
  const int n = instance.n();
  const int m = instance.m();
  if (n > limit) {
    result.status = OracleStatus::too_large;
    return result;
  }

  std::map<std::pair<int, unsigned>, RouteBest> memo;
  auto route_best = [&](int v, unsigned mask) -> const RouteBest& {
    const auto key = std::make_pair(v, mask);
    const auto found = memo.find(key);
    if (found != memo.end()) return found->second;
    RouteBest best;
    if (mask == 0) {
      best.feasible = best.exact_feasible = true;
    } else {
      std::vector<int> reqs;
      for (int r = 0; r < n; ++r) {
        if (mask & (1u << r)) reqs.push_back(r);
      }
      for (const auto& order : enumerate_route_orders(instance, reqs)) {
        ++result.routes_checked;
        if (!capacity_ok(instance, v, order)) continue;
        const RouteCost cost = evaluate_route(instance, v, order);
        const bool eight_ok = cost.violations.zero();
        const bool exact_ok = route_schedulable(instance, v, order);
        if (exact_ok && !eight_ok) ++result.schedule_gaps;
        if (eight_ok && (!best.feasible || cost.distance < best.cost - 1e-9)) {
          best.feasible = true;
          best.cost = cost.distance;
          best.nodes = order;
        }
        if ((exact_ok || eight_ok) && (!best.exact_feasible || cost.distance < best.exact_cost - 1e-9)) {
          best.exact_feasible = true;
          best.exact_cost = cost.distance;
        }
      }
    }
    return memo.emplace(key, std::move(best)).first->second;
  };

  std::vector<int> owner(n, -1);
  std::vector<int> best_owner;
  double best_cost = std::numeric_limits<double>::infinity();
  double best_exact = std::numeric_limits<double>::infinity();
  auto assign = [&](auto&& self, int r) -> void {
    if (r == n) {
      double total = 0.0, exact = 0.0;
      bool ok = true, exact_ok = true;
      for (int v = 0; v < m; ++v) {
        unsigned mask = 0;
        for (int q = 0; q < n; ++q) {
          if (owner[q] == v) mask |= 1u << q;
        }
        const RouteBest& rb = route_best(v, mask);
        ok = ok && rb.feasible;
        exact_ok = exact_ok && rb.exact_feasible;
        if (rb.feasible) total += rb.cost;
        if (rb.exact_feasible) exact += rb.exact_cost;
      }
      if (ok && total < best_cost - 1e-9) {
        best_cost = total;
        best_owner = owner;
      }
      if (exact_ok && exact < best_exact - 1e-9) best_exact = exact;
      return;
    }
    for (int v = 0; v < m; ++v) {
      if (!instance.compatible(r, v)) continue;
      owner[r] = v;
      self(self, r + 1);
    }
    owner[r] = -1;
  };
  assign(assign, 0);

  result.exact_feasible = best_exact < std::numeric_limits<double>::infinity();
  if (result.exact_feasible) result.exact_cost = best_exact;
  if (best_owner.empty() && n > 0) {
    result.status = OracleStatus::infeasible;
    return result;
  }
  result.status = OracleStatus::optimal;
  result.cost = n > 0 ? best_cost : 0.0;
  result.solution = Solution(m);
  for (int v = 0; v < m; ++v) {
    unsigned mask = 0;
    for (int q = 0; q < n; ++q) {
      if (best_owner[q] == v) mask |= 1u << q;
    }
    result.solution.set_nodes(v, route_best(v, mask).nodes);
  }
  return result;
}

}  // namespace darp
