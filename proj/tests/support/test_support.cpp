#include "test_support.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>

#include "darp/instance_io.hpp"

namespace darp::testing {

Instance make_instance(const std::vector<Point>& depots, const std::vector<ToyRequest>& requests,
                       const std::vector<ToyVehicle>& vehicles) {
  Instance inst;
  inst.name = "toy";
  inst.label = "toy";
  inst.depot_count = static_cast<int>(depots.size());
  const int n = static_cast<int>(requests.size());
  std::size_t seats = 1;
  int types = 1;
  for (const auto& r : requests) {
    seats = std::max(seats, r.demand.size());
    for (int t : r.types) types = std::max(types, t + 1);
  }
  for (const auto& v : vehicles) {
    seats = std::max(seats, v.capacity.size());
    types = std::max(types, v.type + 1);
  }
  for (std::size_t s = 0; s < seats; ++s) inst.seat_types.push_back({static_cast<int>(s), "seat" + std::to_string(s)});
  for (int t = 0; t < types; ++t) inst.vehicle_type_names.push_back("type" + std::to_string(t));

  inst.coords.resize(2 * n);
  for (int r = 0; r < n; ++r) {
    inst.coords[r] = requests[r].pickup;
    inst.coords[n + r] = requests[r].delivery;
  }
  inst.coords.insert(inst.coords.end(), depots.begin(), depots.end());
  for (int r = 0; r < n; ++r) {
    const auto& t = requests[r];
    Request req;
    req.id = r;
    req.pickup_window = t.pickup_window;
    req.delivery_window = t.delivery_window;
    req.pickup_service = t.service;
    req.delivery_service = t.service;
    req.max_ride_time = t.max_ride;
    req.demand = t.demand;
    req.demand.resize(seats, 0);
    req.compatible_types = t.types;
    inst.requests.push_back(req);
  }
  for (std::size_t v = 0; v < vehicles.size(); ++v) {
    const auto& t = vehicles[v];
    std::vector<int> cap = t.capacity;
    cap.resize(seats, 0);
    inst.vehicles.push_back({static_cast<int>(v), t.type, t.depot, cap, t.window, t.max_duration});
  }
  fill_euclidean_matrices(inst);
  classify_directions(inst);
  return validate_instance(std::move(inst));
}

std::vector<int> random_order(const Instance& instance, std::span<const int> requests, Rng& rng) {
  std::vector<int> waiting(requests.begin(), requests.end());
  std::vector<int> onboard;
  std::vector<int> out;
  while (!waiting.empty() || !onboard.empty()) {
    const int total = static_cast<int>(waiting.size() + onboard.size());
    const int pick = rng.uniform_int(0, total - 1);
    if (pick < static_cast<int>(waiting.size())) {
      const int r = waiting[pick];
      waiting.erase(waiting.begin() + pick);
      out.push_back(instance.pickup_node(r));
      onboard.push_back(r);
    } else {
      const int idx = pick - static_cast<int>(waiting.size());
      out.push_back(instance.delivery_node(onboard[idx]));
      onboard.erase(onboard.begin() + idx);
    }
  }
  return out;
}

RandomRoute random_route(Rng& rng, int requests) {
  RandomInstanceSpec spec;
  spec.n = requests;
  spec.m = 1;
  spec.capacity = 2;
  RandomRoute out{random_instance(spec, rng), {}};
  std::vector<int> all(requests);
  std::iota(all.begin(), all.end(), 0);
  out.nodes = random_order(out.instance, all, rng);
  return out;
}

ReplayedTimes replay_exact(const Instance& instance, int vehicle, std::span<const int> nodes,
                           double depart, std::span<const double> holds) {
  using Q = boost::multiprecision::cpp_rational;
  const std::size_t k = nodes.size();
  std::vector<Q> a(k + 2), b(k + 2), d(k + 2);
  a[0] = b[0] = d[0] = Q(depart);
  const int depot = instance.vehicle_depot_node(vehicle);
  int prev = depot;
  for (std::size_t pos = 1; pos <= k + 1; ++pos) {
    const int node = pos <= k ? nodes[pos - 1] : depot;
    a[pos] = d[pos - 1] + Q(instance.t(prev, node));
    b[pos] = a[pos];
    if (pos <= k) {
      b[pos] = std::max(b[pos], Q(instance.window(node).early));
      if (!holds.empty()) b[pos] = std::max(b[pos], Q(holds[pos]));
      d[pos] = b[pos] + Q(instance.service_time(node));
    } else {
      d[pos] = b[pos];
    }
    prev = node;
  }
  ReplayedTimes out;
  for (std::size_t pos = 0; pos < k + 2; ++pos) {
    out.arrival.push_back(a[pos].convert_to<double>());
    out.begin.push_back(b[pos].convert_to<double>());
    out.departure.push_back(d[pos].convert_to<double>());
  }
  return out;
}

double raw_window_excess(const Instance& instance, std::span<const int> nodes, const Schedule& s) {
  double total = 0.0;
  for (std::size_t pos = 1; pos <= nodes.size(); ++pos) {
    const TimeWindow w = instance.window(nodes[pos - 1]);
    total += std::max(0.0, s.begin[pos] - w.late) + std::max(0.0, w.early - s.begin[pos]);
  }
  return total;
}

double raw_ride_excess(const Instance& instance, std::span<const int> nodes, const Schedule& s) {
  double total = 0.0;
  for (std::size_t pos = 1; pos <= nodes.size(); ++pos) {
    const int node = nodes[pos - 1];
    if (!instance.is_pickup(node) || s.partner[pos] < 0) continue;
    total += std::max(0.0, s.ride_time[pos] - instance.requests[node].max_ride_time);
  }
  return total;
}

Schedule delayed(const Instance& instance, int vehicle, std::span<const int> nodes,
                 const Schedule& base, std::size_t position, double delta) {
  Schedule out;
  std::vector<double> holds(nodes.size() + 2, 0.0);
  // Keep every earlier service start where it was.
  for (std::size_t pos = 1; pos < position; ++pos) holds[pos] = base.begin[pos];
  if (position == 0) {
    compute_schedule(instance, vehicle, nodes, base.start_time() + delta, holds, out);
  } else {
    holds[position] = base.begin[position] + delta;
    compute_schedule(instance, vehicle, nodes, base.start_time(), holds, out);
  }
  return out;
}

bool delay_creates_violation(const Instance& instance, int vehicle, std::span<const int> nodes,
                             const Schedule& base, std::size_t position, double delta,
                             double eps) {
  const Schedule after = delayed(instance, vehicle, nodes, base, position, delta);
  for (std::size_t pos = 1; pos <= nodes.size(); ++pos) {
    const int node = nodes[pos - 1];
    const double late = instance.window(node).late;
    if (std::max(0.0, after.begin[pos] - late) > std::max(0.0, base.begin[pos] - late) + eps) {
      return true;
    }
    if (instance.is_pickup(node) && base.partner[pos] >= 0) {
      const double limit = instance.requests[node].max_ride_time;
      if (std::max(0.0, after.ride_time[pos] - limit) >
          std::max(0.0, base.ride_time[pos] - limit) + eps) {
        return true;
      }
    }
  }
  return false;
}

double brute_force_slack(const Instance& instance, int vehicle, std::span<const int> nodes,
                         const Schedule& base, std::size_t position, double resolution) {
  double lo = 0.0;
  double hi = 1.0;
  while (!delay_creates_violation(instance, vehicle, nodes, base, position, hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e7) return hi;
  }
  while (hi - lo > resolution) {
    const double mid = 0.5 * (lo + hi);
    if (delay_creates_violation(instance, vehicle, nodes, base, position, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo;
}

double grid_min_duration(const Instance& instance, int vehicle, std::span<const int> nodes,
                         double step) {
  const double open = instance.vehicles[vehicle].depot_window.early;
  Schedule s;
  compute_schedule(instance, vehicle, nodes, open, {}, s);
  const double base_excess = raw_window_excess(instance, nodes, s);
  double best = s.duration;
  double horizon = open;
  for (int node : nodes) horizon = std::max(horizon, instance.window(node).late);
  for (int i = 1; open + i * step <= horizon; ++i) {
    compute_schedule(instance, vehicle, nodes, open + i * step, {}, s);
    if (raw_window_excess(instance, nodes, s) <= base_excess + 1e-9) best = std::min(best, s.duration);
  }
  return best;
}

double summed_distance(const Instance& instance, const Solution& solution) {
  double total = 0.0;
  for (int v = 0; v < solution.size(); ++v) {
    const auto& nodes = solution.nodes(v);
    if (nodes.empty()) continue;
    int prev = instance.vehicle_depot_node(v);
    for (int node : nodes) {
      total += instance.distance(prev, node);
      prev = node;
    }
    total += instance.distance(prev, instance.vehicle_depot_node(v));
  }
  return total;
}

bool structurally_valid(const Instance& instance, const Solution& solution) {
  std::vector<int> seen_pickup(instance.n(), 0), seen_delivery(instance.n(), 0);
  for (int v = 0; v < solution.size(); ++v) {
    std::vector<bool> open(instance.n(), false);
    for (int node : solution.nodes(v)) {
      if (node < 0 || node >= 2 * instance.n()) return false;
      const int r = instance.request_of(node);
      if (!instance.compatible(r, v)) return false;
      if (instance.is_pickup(node)) {
        ++seen_pickup[r];
        open[r] = true;
      } else {
        if (!open[r]) return false;
        open[r] = false;
        ++seen_delivery[r];
      }
    }
    if (std::any_of(open.begin(), open.end(), [](bool b) { return b; })) return false;
  }
  for (int r = 0; r < instance.n(); ++r) {
    if (seen_pickup[r] != 1 || seen_delivery[r] != 1) return false;
  }
  return true;
}

}  // namespace darp::testing
