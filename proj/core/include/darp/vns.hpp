#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "darp/evaluation.hpp"
#include "darp/local_search.hpp"
#include "darp/model.hpp"
#include "darp/rng.hpp"
#include "darp/shaking.hpp"

namespace darp {

enum class InitialHeuristic { h1, h2 };

/// Which way the 1.02 test gating local search reads.
enum class LsGate {
  literal,  // search when f1(s) < factor * f1(s')
  flipped,  // search when f1(s') < factor * f1(s)
};

struct VnsConfig {
  std::string name = "custom";
  std::vector<NeighborhoodKind> neighborhoods;
  int h_max = 4;
  LsMode ls_mode = LsMode::none;
  FocusMode focus = FocusMode::off;
  InitialHeuristic initial = InitialHeuristic::h1;
  int h2_trials = 1000;
  int it_max = 15000;
  PenaltySeeds seeds;
  double q_max = 2.0;
  double t_max = 30.0;
  double w_max = 30.0;
  double shake_accept_factor = 1.02;
  LsGate ls_gate = LsGate::literal;
  bool adjust = true;
  std::uint64_t seed = 0;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws ConfigError if a field is out of range.
void validate_config(const VnsConfig& config);

/// The eighteen algorithm variants, "algo1" .. "algo18".
VnsConfig named_config(std::string_view name);
std::vector<std::string> named_config_names();

struct TraceEvent {
  int iteration = 0;
  double f1 = 0.0;
  double f = 0.0;
  bool feasible = false;
  std::string kind;  // "initial", "best", "current", "adjusted"
};

struct RunStats {
  int iterations = 0;
  std::vector<TraceEvent> trace;
  double wall_seconds = 0.0;
  PenaltyState final_penalties;
  /// Every delta drawn, in order; deltas[k] scales the k-th update.
  std::vector<double> deltas;
  int penalty_updates = 0;
  int adjust_invocations = 0;
  int adjust_successes = 0;
  int shakes_applied = 0;
  int local_searches = 0;
};

struct VnsResult {
  std::optional<Solution> best;  // empty when no feasible solution was found
  RunStats stats;
  bool feasible() const { return best.has_value(); }
};

enum class ViolationFamily { capacity, ride_time, window };

/// The single family among capacity, ride time and windows that `v`
/// violates, provided duration is clean and the total is below its threshold.
std::optional<ViolationFamily> quasi_feasible_family(const ViolationVector& v,
                                                     const VnsConfig& config);

struct AdjustOutcome {
  Solution solution;
  std::vector<int> relocated;  // requests in the order they were moved
};

/// Relocates violating requests one at a time (smallest id first) to the
/// head or tail of another used compatible route, or to an empty compatible
/// route, whichever gives the lowest f. Returns nullopt when the solution is
/// not quasi-feasible.
std::optional<AdjustOutcome> adjust(const Instance& instance, const Solution& solution,
                                    const PenaltyState& penalties, const VnsConfig& config);

/// Requests that currently contribute to `family`'s violation.
std::vector<int> violating_requests(const Instance& instance, const Solution& solution,
                                    ViolationFamily family);

VnsResult run_vns(const Instance& instance, const VnsConfig& config, Rng& rng);
/// Seeds a stream from config.seed.
VnsResult run_vns(const Instance& instance, const VnsConfig& config);

}  // namespace darp
