#pragma once

#include <span>
#include <vector>

#include "darp/model.hpp"

namespace darp {

/// Every sequence of the pickups and deliveries of `requests` in which each
/// pickup precedes its delivery: (2k)!/2^k of them. Limited to k <= 5.
std::vector<std::vector<int>> enumerate_route_orders(const Instance& instance,
                                                     std::span<const int> requests);

/// Exact schedulability of a fixed node order on `vehicle`: windows,
/// ride times and route duration as difference constraints, solved by a
/// negative-cycle check. Waiting is allowed anywhere. Capacity is not
/// looked at. A constraint may be missed by at most kTolerance.
bool route_schedulable(const Instance& instance, int vehicle, std::span<const int> nodes);

enum class OracleStatus { optimal, infeasible, too_large };
const char* to_string(OracleStatus status);

struct OracleResult {
  OracleStatus status = OracleStatus::infeasible;
  /// Optimum over solutions that pass is_feasible (eight-step schedules).
  double cost = 0.0;
  Solution solution;
  /// Optimum when any schedule is allowed; can only be <= cost.
  bool exact_feasible = false;
  double exact_cost = 0.0;
  long routes_checked = 0;
  /// Route orders the exact check accepts but the eight-step schedule does not.
  long schedule_gaps = 0;
};

/// Exhaustive search over request-to-vehicle assignments and all route
/// orders. Status too_large when n > limit.
OracleResult solve_exact(const Instance& instance, int limit = 4);

}  // namespace darp
