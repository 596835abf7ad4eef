#include "darp/schedule.hpp"

#include <algorithm>
#include <limits>

namespace darp {

void compute_schedule(const Instance& instance, int vehicle, std::span<const int> nodes,
                      double depart, std::span<const double> holds, Schedule& out) {
  const std::size_t k = nodes.size();
  const std::size_t size = k + 2;
  const int seats = instance.seat_count();
  out.arrival.assign(size, 0.0);
  out.begin.assign(size, 0.0);
  out.departure.assign(size, 0.0);
  out.ride_time.assign(size, 0.0);
  out.partner.assign(size, -1);
  out.seat_count = seats;
  out.load.assign(size * seats, 0);

  const int depot = instance.vehicle_depot_node(vehicle);
  out.arrival[0] = out.begin[0] = out.departure[0] = depart;

  int prev = depot;
  for (std::size_t pos = 1; pos <= k; ++pos) {
    const int node = nodes[pos - 1];
    const double a = out.departure[pos - 1] + instance.t(prev, node);
    double b = std::max(a, instance.window(node).early);
    if (!holds.empty()) b = std::max(b, holds[pos]);
    out.arrival[pos] = a;
    out.begin[pos] = b;
    out.departure[pos] = b + instance.service_time(node);
    for (int r = 0; r < seats; ++r) {
      out.load[pos * seats + r] = out.load[(pos - 1) * seats + r] + instance.load_delta(node, r);
    }
    prev = node;
  }
  const double back = out.departure[k] + instance.t(prev, depot);
  out.arrival[k + 1] = out.begin[k + 1] = out.departure[k + 1] = back;
  for (int r = 0; r < seats; ++r) out.load[(k + 1) * seats + r] = out.load[k * seats + r];
  out.duration = back - depart;

  for (std::size_t pos = 1; pos <= k; ++pos) {
    const int node = nodes[pos - 1];
    if (!instance.is_delivery(node)) continue;
    const int pickup = instance.partner(node);
    for (std::size_t q = pos - 1; q >= 1; --q) {
      if (nodes[q - 1] == pickup) {
        out.partner[pos] = static_cast<int>(q);
        out.partner[q] = static_cast<int>(pos);
        out.ride_time[q] = out.departure[pos] - out.departure[q];
        break;
      }
    }
  }
}

Schedule earliest_schedule(const Instance& instance, const Route& route, double depart) {
  Schedule out;
  compute_schedule(instance, route.vehicle, route.nodes, depart, {}, out);
  return out;
}

double forward_time_slack(const Instance& instance, std::span<const int> nodes,
                          const Schedule& schedule, std::size_t position) {
  const std::size_t k = nodes.size();
  double slack = std::numeric_limits<double>::infinity();
  double waited = 0.0;
  for (std::size_t j = position; j <= k; ++j) {
    if (j > position) waited += schedule.waiting(j);
    if (j == 0) continue;
    const int node = nodes[j - 1];
    double room = std::max(0.0, instance.window(node).late - schedule.begin[j]);
    const int pickup_pos = schedule.partner[j];
    // Delaying a delivery lengthens the ride only if its pickup stays put.
    if (instance.is_delivery(node) && pickup_pos >= 0 &&
        static_cast<std::size_t>(pickup_pos) < position) {
      const double limit = instance.requests[instance.request_of(node)].max_ride_time;
      room = std::min(room, std::max(0.0, limit - schedule.ride_time[pickup_pos]));
    }
    slack = std::min(slack, waited + room);
  }
  return slack;
}

double forward_time_slack(const Instance& instance, const Route& route,
                          const Schedule& schedule, std::size_t position) {
  return forward_time_slack(instance, route.nodes, schedule, position);
}

void eight_step_evaluate(const Instance& instance, int vehicle, std::span<const int> nodes,
                         Schedule& out) {
  const double open = instance.vehicles[vehicle].depot_window.early;
  compute_schedule(instance, vehicle, nodes, open, {}, out);
  const std::size_t k = nodes.size();
  if (k == 0) return;

  double total_wait = 0.0;
  for (std::size_t p = 1; p <= k; ++p) total_wait += out.waiting(p);
  if (total_wait > kTolerance) {
    const double shift = std::min(forward_time_slack(instance, nodes, out, 0), total_wait);
    if (shift > 0.0) compute_schedule(instance, vehicle, nodes, open + shift, {}, out);
  }

  std::vector<double> holds;
  for (std::size_t pos = 1; pos < k; ++pos) {
    if (!instance.is_pickup(nodes[pos - 1])) continue;
    double downstream = 0.0;
    for (std::size_t p = pos + 1; p <= k; ++p) downstream += out.waiting(p);
    if (downstream <= kTolerance) continue;
    const double shift = std::min(forward_time_slack(instance, nodes, out, pos), downstream);
    if (shift <= 0.0) continue;
    if (holds.empty()) holds.assign(k + 2, 0.0);
    holds[pos] = out.begin[pos] + shift;
    compute_schedule(instance, vehicle, nodes, out.start_time(), holds, out);
  }
}

Schedule eight_step_evaluate(const Instance& instance, const Route& route) {
  Schedule out;
  eight_step_evaluate(instance, route.vehicle, route.nodes, out);
  return out;
}

}  // namespace darp
