#pragma once

// Route timing. Positions on a schedule are 0 for the departure depot,
// 1..k for the k route nodes and k+1 for the return depot.

#include <span>
#include <vector>

#include "darp/model.hpp"

namespace darp {

struct Schedule {
  std::vector<double> arrival;    // A
  std::vector<double> begin;      // B, service start (B >= A, B >= e)
  std::vector<double> departure;  // B + service time
  /// Ride time L at pickup positions whose delivery is on the route, else 0.
  std::vector<double> ride_time;
  /// Position of the paired pickup/delivery node, -1 if absent or a depot.
  std::vector<int> partner;
  int seat_count = 0;
  /// Load after service, (k + 2) x seat_count row-major.
  std::vector<int> load;
  double duration = 0.0;

  std::size_t size() const { return arrival.size(); }
  std::size_t node_count() const { return arrival.size() - 2; }
  double waiting(std::size_t pos) const { return begin[pos] - arrival[pos]; }
  int load_at(std::size_t pos, int seat) const { return load[pos * seat_count + seat]; }
  double start_time() const { return begin.front(); }
  double return_time() const { return arrival.back(); }
};

/// Forward pass from `depart`: A_j from the predecessor's departure,
/// B_j = max(A_j, e_j). Violations are recorded, never raised.
Schedule earliest_schedule(const Instance& instance, const Route& route, double depart);

/// As earliest_schedule but with lower bounds on B per position
/// (`holds` has one entry per position, or is empty).
void compute_schedule(const Instance& instance, int vehicle, std::span<const int> nodes,
                      double depart, std::span<const double> holds, Schedule& out);

/// Largest delay of B at `position` (0..k) that increases no node's
/// time-window excess and no ride-time excess. Infinite when nothing binds
/// (only possible at the depot of an empty route).
double forward_time_slack(const Instance& instance, std::span<const int> nodes,
                          const Schedule& schedule, std::size_t position);
double forward_time_slack(const Instance& instance, const Route& route,
                          const Schedule& schedule, std::size_t position);

/// Eight-step evaluation:
///  1. schedule with departure e_depot;
///  2. compute F at the depot;
///  3. delay departure by min(F_depot, total waiting on the route);
///  4. reschedule;
///  5. for each pickup in sequence order with positive downstream waiting,
///     delay its service start by min(F_pickup, downstream waiting) and
///     reschedule;
///  6-8. ride times, loads and duration are left on the returned schedule.
Schedule eight_step_evaluate(const Instance& instance, const Route& route);
void eight_step_evaluate(const Instance& instance, int vehicle, std::span<const int> nodes,
                         Schedule& out);

}  // namespace darp
