#include "darp/local_search.hpp"

#include <limits>

#include "darp/construction.hpp"

namespace darp {

namespace {

constexpr double kTieEpsilon = 1e-9;

}  // namespace

const char* to_string(LsMode mode) {
  switch (mode) {
    case LsMode::none: return "none";
    case LsMode::ls1: return "LS1";
    case LsMode::ls2: return "LS2";
    case LsMode::ls3: return "LS3";
  }
  return "none";
}

const char* to_string(FocusMode mode) {
  switch (mode) {
    case FocusMode::off: return "off";
    case FocusMode::plain: return "plain";
    case FocusMode::eight_step: return "8step";
  }
  return "off";
}

std::optional<LsMode> parse_ls_mode(std::string_view text) {
  if (text == "none") return LsMode::none;
  if (text == "LS1" || text == "ls1") return LsMode::ls1;
  if (text == "LS2" || text == "ls2") return LsMode::ls2;
  if (text == "LS3" || text == "ls3") return LsMode::ls3;
  return std::nullopt;
}

std::optional<FocusMode> parse_focus_mode(std::string_view text) {
  if (text == "off") return FocusMode::off;
  if (text == "plain") return FocusMode::plain;
  if (text == "8step" || text == "eight_step") return FocusMode::eight_step;
  return std::nullopt;
}

int critical_node(const Instance& instance, int request) {
  if (instance.requests[request].direction == Direction::outbound) {
    return instance.delivery_node(request);
  }
  return instance.pickup_node(request);
}

int place_critical(const Instance& instance, int vehicle, std::span<const int> partial, int node,
                   const PenaltyState& penalties) {
  std::vector<int> candidate(partial.begin(), partial.end());
  candidate.insert(candidate.begin(), node);
  int best = 0;
  double best_window = std::numeric_limits<double>::infinity();
  double best_value = std::numeric_limits<double>::infinity();
  for (int pos = 0; pos <= static_cast<int>(partial.size()); ++pos) {
    if (pos > 0) std::swap(candidate[pos - 1], candidate[pos]);
    const RouteCost cost = evaluate_route(instance, vehicle, candidate);
    const double window = cost.violations.window;
    const double value = penalized(cost, penalties);
    if (window < best_window - kTieEpsilon ||
        (window <= best_window + kTieEpsilon && value < best_value - kTieEpsilon)) {
      best = pos;
      best_window = window;
      best_value = value;
    }
  }
  return best;
}

void local_search_route(const Instance& instance, Solution& solution, int v, LsMode mode,
                        const PenaltyState& penalties) {
  if (mode == LsMode::none) return;
  const std::vector<int> order = requests_on(instance, solution.nodes(v));
  std::vector<int> candidate;
  for (int r : order) {
    const double base = penalized(route_cost(instance, solution, v), penalties);
    std::vector<int> partial = solution.nodes(v);
    erase_request(instance, partial, r);

    const int critical = critical_node(instance, r);
    const int other = instance.partner(critical);
    const int ci = place_critical(instance, v, partial, critical, penalties);
    partial.insert(partial.begin() + ci, critical);

    // Admissible slots for the other node, nearest to the critical node first.
    std::vector<int> slots;
    if (instance.is_pickup(critical)) {
      for (int pos = ci + 1; pos <= static_cast<int>(partial.size()); ++pos) slots.push_back(pos);
    } else {
      for (int pos = ci; pos >= 0; --pos) slots.push_back(pos);
    }

    std::vector<int> best_nodes;
    RouteCost best_cost;
    double best_value = base - kTieEpsilon;
    for (int pos : slots) {
      candidate = partial;
      candidate.insert(candidate.begin() + pos, other);
      const RouteCost cost = evaluate_route(instance, v, candidate);
      if (mode == LsMode::ls3 && cost.violations.window > 0.0) continue;
      const double value = penalized(cost, penalties);
      if (value < best_value) {
        best_value = value - kTieEpsilon;
        best_nodes = candidate;
        best_cost = cost;
        if (mode == LsMode::ls1) break;
      }
    }
    if (!best_nodes.empty()) solution.set_nodes(v, std::move(best_nodes), best_cost);
  }
}

Solution local_search(const Instance& instance, const Solution& solution,
                      std::span<const int> routes, LsMode mode, const PenaltyState& penalties) {
  Solution out = solution;
  for (int v : routes) local_search_route(instance, out, v, mode, penalties);
  return out;
}

std::vector<std::vector<int>> zero_load_segments(const Instance& instance,
                                                 std::span<const int> nodes) {
  std::vector<std::vector<int>> segments;
  std::vector<int> current;
  int open = 0;
  for (int node : nodes) {
    if (instance.is_pickup(node)) {
      current.push_back(node);
      ++open;
    } else {
      --open;
    }
    if (open <= 0 && !current.empty()) {
      segments.push_back(std::move(current));
      current.clear();
      open = 0;
    }
  }
  if (!current.empty()) segments.push_back(std::move(current));
  return segments;
}

void focus_route(const Instance& instance, Solution& solution, int v, bool use_8step,
                 const PenaltyState& penalties) {
  const Scheduler scheduler = use_8step ? Scheduler::eight_step : Scheduler::earliest;
  for (const auto& segment : zero_load_segments(instance, solution.nodes(v))) {
    const double base = penalized(route_cost(instance, solution, v), penalties);
    Solution trial = solution;
    std::vector<int> nodes = trial.nodes(v);
    for (int r : segment) erase_request(instance, nodes, r);
    trial.set_nodes(v, std::move(nodes));
    for (int r : segment) insert_best(instance, trial, v, r, penalties, scheduler);
    const RouteCost& cost = route_cost(instance, trial, v);
    if (penalized(cost, penalties) < base - kTieEpsilon) {
      solution.set_nodes(v, trial.nodes(v), cost);
    }
  }
}

Solution focus_local_search(const Instance& instance, const Solution& solution,
                            std::span<const int> routes, bool use_8step,
                            const PenaltyState& penalties) {
  Solution out = solution;
  for (int v : routes) focus_route(instance, out, v, use_8step, penalties);
  return out;
}

Solution improve(const Instance& instance, const Solution& solution, std::span<const int> routes,
                 LsMode mode, FocusMode focus, const PenaltyState& penalties) {
  Solution out = solution;
  for (int v : routes) {
    local_search_route(instance, out, v, mode, penalties);
    if (focus != FocusMode::off) {
      focus_route(instance, out, v, focus == FocusMode::eight_step, penalties);
    }
  }
  return out;
}

}  // namespace darp
