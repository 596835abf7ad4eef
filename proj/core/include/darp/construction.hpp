#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "darp/evaluation.hpp"
#include "darp/model.hpp"
#include "darp/rng.hpp"

namespace darp {

class IncompatibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Insertion {
  int pickup_pos = 0;    // index of the pickup in the resulting sequence
  int delivery_pos = 1;  // index of the delivery in the resulting sequence
  double delta = 0.0;    // change of the route's penalized cost
  RouteCost cost;        // cost of the resulting route
};

/// Cheapest placement of `request` into `route` over every pickup position
/// and every later delivery position. Ties go to the earlier pickup, then
/// the earlier delivery. Throws IncompatibleError if the vehicle type is
/// not in the request's compatible set.
Insertion best_insertion(const Instance& instance, const Route& route, int request,
                         const PenaltyState& penalties,
                         Scheduler scheduler = Scheduler::eight_step);

/// Applies best_insertion to route `v` of `solution`.
Insertion insert_best(const Instance& instance, Solution& solution, int v, int request,
                      const PenaltyState& penalties, Scheduler scheduler = Scheduler::eight_step);

/// Earliest-pickup ordering with nearest-route assignment; pairs are
/// appended pickup-then-delivery. Capacity and ride time are ignored.
Solution heuristic1(const Instance& instance);

/// One greedy pass: requests in `order`, each placed at the globally best
/// (route, positions).
Solution greedy_insertion_pass(const Instance& instance, std::span<const int> order,
                               const PenaltyState& penalties);

/// Best of `trials` greedy passes over uniformly shuffled request orders.
/// Pass i draws its shuffle from rng.split(i).
Solution heuristic2(const Instance& instance, const Rng& rng, const PenaltyState& penalties,
                    int trials = 1000);

}  // namespace darp
