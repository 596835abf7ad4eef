#pragma once

#include <span>
#include <string>
#include <vector>

#include "darp/model.hpp"
#include "darp/rng.hpp"
#include "darp/schedule.hpp"

namespace darp {

/// Initial penalty coefficients.
struct PenaltySeeds {
  double alpha = 100.0;    // ride time
  double beta = 1.0;       // time windows
  double gamma = 10000.0;  // capacity
  double tau = 1.0;        // route duration
};

inline constexpr double kDeltaMin = 0.05;
inline constexpr double kDeltaMax = 0.1;

struct PenaltyState {
  double alpha = 100.0;
  double beta = 1.0;
  double gamma = 10000.0;
  double tau = 1.0;
  double delta = kDeltaMin;  // factor applied at the next incumbent
};

/// Seeds plus a first delta drawn uniformly from [0.05, 0.1].
PenaltyState initial_penalties(const PenaltySeeds& seeds, Rng& rng);

/// Multiplies every coefficient by (1 + delta) and draws a fresh delta.
PenaltyState update_penalties(const PenaltyState& state, Rng& rng);

/// Violations of one scheduled route; amounts below kTolerance count as 0.
ViolationVector route_violations(const Instance& instance, int vehicle,
                                 std::span<const int> nodes, const Schedule& schedule);

double route_distance(const Instance& instance, int vehicle, std::span<const int> nodes);

enum class Scheduler { earliest, eight_step };

/// Distance and violations of a node sequence on `vehicle`.
RouteCost evaluate_route(const Instance& instance, int vehicle, std::span<const int> nodes,
                         Scheduler scheduler = Scheduler::eight_step);

inline double penalized(const RouteCost& cost, const PenaltyState& p) {
  const auto& v = cost.violations;
  return cost.distance + p.alpha * v.ride_time + p.beta * v.window + p.gamma * v.capacity +
         p.tau * v.duration;
}

/// Memoized eight-step cost of route `v`.
const RouteCost& route_cost(const Instance& instance, const Solution& solution, int v);

double cost_f1(const Instance& instance, const Solution& solution);
ViolationVector violations(const Instance& instance, const Solution& solution);
/// f = f1 + alpha t + beta w + gamma q + tau d.
double evaluate(const Instance& instance, const Solution& solution, const PenaltyState& penalties);
double evaluate(double f1, const ViolationVector& v, const PenaltyState& penalties);

/// True when all four violation totals are zero (structure assumed valid).
bool violation_free(const Instance& instance, const Solution& solution);

enum class Constraint {
  coverage,       // (1) each request served exactly once
  pairing,        // (2) pickup and delivery on the same vehicle, pickup first
  flow,           // (3)-(4) well-formed routes, one per vehicle
  capacity,       // (6b)
  time_window,    // (15)
  ride_time,      // (14)
  duration,       // (16)
  depot_span,     // (17)
  compatibility,  // (19)
};

const char* to_string(Constraint c);

struct FeasibilityReport {
  bool feasible = true;
  std::vector<Constraint> violated;
  std::vector<std::string> details;

  bool has(Constraint c) const;
};

/// Full check against the model constraints; reports, never throws.
FeasibilityReport is_feasible(const Instance& instance, const Solution& solution);

}  // namespace darp
