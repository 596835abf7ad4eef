#include "darp/vns.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "darp/construction.hpp"

namespace darp {

void validate_config(const VnsConfig& c) {
  if (c.neighborhoods.empty()) throw ConfigError("config: neighborhood set is empty");
  if (c.h_max < 1) throw ConfigError("config: h_max must be >= 1");
  if (c.it_max < 1) throw ConfigError("config: it_max must be >= 1");
  if (c.h2_trials < 1) throw ConfigError("config: h2_trials must be >= 1");
  if (c.q_max < 0 || c.t_max < 0 || c.w_max < 0) {
    throw ConfigError("config: adjust thresholds must be >= 0");
  }
  if (!(c.shake_accept_factor > 1.0)) throw ConfigError("config: shake_accept_factor must be > 1");
}

namespace {

using K = NeighborhoodKind;

VnsConfig make(std::string name, std::vector<K> kinds, LsMode ls, FocusMode focus, int h_max) {
  VnsConfig c;
  c.name = std::move(name);
  c.neighborhoods = std::move(kinds);
  c.ls_mode = ls;
  c.focus = focus;
  c.h_max = h_max;
  return c;
}

}  // namespace

VnsConfig named_config(std::string_view name) {
  const std::vector<K> all5 = {K::swap, K::repairing_move, K::move, K::chain, K::eliminate};
  const std::vector<K> all6 = {K::swap, K::repairing_move, K::move, K::chain, K::eliminate,
                               K::intra_move};
  const std::vector<K> no_elim_im = {K::swap, K::repairing_move, K::move, K::chain,
                                     K::intra_move};
  const std::vector<K> no_chain = {K::swap, K::repairing_move, K::move, K::eliminate};
  const std::vector<K> srmmc = {K::swap, K::repairing_move, K::move, K::chain};
  const std::vector<K> srmm = {K::swap, K::repairing_move, K::move};
  const std::string n(name);
  if (n == "algo1") return make(n, all5, LsMode::ls1, FocusMode::plain, 6);
  if (n == "algo2") return make(n, all5, LsMode::ls1, FocusMode::plain, 6);
  if (n == "algo3") return make(n, all6, LsMode::ls1, FocusMode::off, 6);
  if (n == "algo4") return make(n, all6, LsMode::ls1, FocusMode::plain, 6);
  if (n == "algo5") return make(n, no_elim_im, LsMode::ls2, FocusMode::plain, 3);
  if (n == "algo6") return make(n, no_chain, LsMode::ls2, FocusMode::plain, 3);
  if (n == "algo7") return make(n, srmmc, LsMode::ls2, FocusMode::off, 2);
  if (n == "algo8") return make(n, srmmc, LsMode::ls2, FocusMode::plain, 2);
  if (n == "algo9") return make(n, srmmc, LsMode::ls2, FocusMode::off, 4);
  if (n == "algo10") return make(n, srmmc, LsMode::ls2, FocusMode::plain, 4);
  if (n == "algo11") return make(n, srmm, LsMode::ls2, FocusMode::off, 4);
  if (n == "algo12") return make(n, srmm, LsMode::ls2, FocusMode::plain, 4);
  if (n == "algo13") return make(n, srmmc, LsMode::ls3, FocusMode::off, 4);
  if (n == "algo14") return make(n, srmm, LsMode::ls3, FocusMode::plain, 4);
  if (n == "algo15") return make(n, srmmc, LsMode::none, FocusMode::plain, 4);
  if (n == "algo16") return make(n, srmm, LsMode::none, FocusMode::plain, 4);
  if (n == "algo17") return make(n, srmmc, LsMode::none, FocusMode::eight_step, 4);
  if (n == "algo18") return make(n, srmm, LsMode::none, FocusMode::eight_step, 4);
  throw ConfigError("UnknownName: no algorithm named '" + n + "'");
}

std::vector<std::string> named_config_names() {
  std::vector<std::string> out;
  for (int i = 1; i <= 18; ++i) out.push_back("algo" + std::to_string(i));
  return out;
}

std::optional<ViolationFamily> quasi_feasible_family(const ViolationVector& v,
                                                     const VnsConfig& config) {
  if (v.duration > 0.0) return std::nullopt;
  const int families = (v.capacity > 0.0) + (v.ride_time > 0.0) + (v.window > 0.0);
  if (families != 1) return std::nullopt;
  if (v.capacity > 0.0) {
    if (v.capacity < config.q_max) return ViolationFamily::capacity;
  } else if (v.ride_time > 0.0) {
    if (v.ride_time < config.t_max) return ViolationFamily::ride_time;
  } else if (v.window < config.w_max) {
    return ViolationFamily::window;
  }
  return std::nullopt;
}

std::vector<int> violating_requests(const Instance& instance, const Solution& solution,
                                    ViolationFamily family) {
  std::vector<int> out;
  Schedule s;
  for (int v = 0; v < solution.size(); ++v) {
    const auto& nodes = solution.nodes(v);
    if (nodes.empty()) continue;
    eight_step_evaluate(instance, v, nodes, s);
    const auto& cap = instance.vehicles[v].capacity;
    const std::size_t k = nodes.size();
    std::vector<bool> over(k + 2, false);
    for (std::size_t pos = 1; pos <= k; ++pos) {
      for (int r = 0; r < instance.seat_count(); ++r) {
        if (s.load_at(pos, r) > cap[r]) over[pos] = true;
      }
    }
    for (std::size_t pos = 1; pos <= k; ++pos) {
      const int node = nodes[pos - 1];
      if (!instance.is_pickup(node)) continue;
      const int partner = s.partner[pos];
      bool hit = false;
      switch (family) {
        case ViolationFamily::capacity: {
          const std::size_t end = partner > 0 ? static_cast<std::size_t>(partner) : k + 1;
          for (std::size_t q = pos; q < end && !hit; ++q) hit = over[q];
          break;
        }
        case ViolationFamily::ride_time:
          hit = partner > 0 &&
                s.ride_time[pos] - instance.requests[node].max_ride_time > kTolerance;
          break;
        case ViolationFamily::window: {
          auto late_or_early = [&](std::size_t p, int nd) {
            const TimeWindow w = instance.window(nd);
            return s.begin[p] - w.late > kTolerance || w.early - s.begin[p] > kTolerance;
          };
          hit = late_or_early(pos, node) ||
                (partner > 0 && late_or_early(partner, instance.partner(node)));
          break;
        }
      }
      if (hit) out.push_back(node);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<AdjustOutcome> adjust(const Instance& instance, const Solution& solution,
                                    const PenaltyState& penalties, const VnsConfig& config) {
  const auto family = quasi_feasible_family(violations(instance, solution), config);
  if (!family) return std::nullopt;

  AdjustOutcome out{solution, {}};
  Solution& s = out.solution;
  std::vector<bool> processed(instance.n(), false);
  while (true) {
    const std::vector<int> pending = violating_requests(instance, s, *family);
    const auto it = std::find_if(pending.begin(), pending.end(),
                                 [&](int r) { return !processed[r]; });
    if (it == pending.end()) break;
    const int r = *it;
    processed[r] = true;

    const int from = s.assignment(instance.n())[r];
    const int p = instance.pickup_node(r);
    const int d = instance.delivery_node(r);
    int best_v = -1;
    std::vector<int> best_nodes;
    RouteCost best_cost;
    double best_delta = 0.0;
    for (int v = 0; v < s.size(); ++v) {
      if (v == from || !instance.compatible(r, v)) continue;
      const auto& nodes = s.nodes(v);
      const double before = penalized(route_cost(instance, s, v), penalties);
      std::vector<std::vector<int>> options;
      if (nodes.empty()) {
        options.push_back({p, d});
      } else {
        std::vector<int> head = {p, d};
        head.insert(head.end(), nodes.begin(), nodes.end());
        std::vector<int> tail = nodes;
        tail.push_back(p);
        tail.push_back(d);
        options.push_back(std::move(head));
        options.push_back(std::move(tail));
      }
      for (auto& option : options) {
        const RouteCost cost = evaluate_route(instance, v, option);
        const double delta = penalized(cost, penalties) - before;
        if (best_v < 0 || delta < best_delta - 1e-9) {
          best_v = v;
          best_delta = delta;
          best_nodes = std::move(option);
          best_cost = cost;
        }
      }
    }
    if (best_v < 0) continue;
    std::vector<int> source = s.nodes(from);
    erase_request(instance, source, r);
    s.set_nodes(from, std::move(source));
    s.set_nodes(best_v, std::move(best_nodes), best_cost);
    out.relocated.push_back(r);
  }
  return out;
}

VnsResult run_vns(const Instance& instance, const VnsConfig& config, Rng& rng) {
  validate_config(config);
  const auto started = std::chrono::steady_clock::now();
  const std::vector<NeighborhoodSpec> sequence =
      neighborhood_sequence(config.neighborhoods, config.h_max);

  VnsResult result;
  RunStats& stats = result.stats;
  PenaltyState penalties = initial_penalties(config.seeds, rng);
  stats.deltas.push_back(penalties.delta);
  auto bump_penalties = [&] {
    penalties = update_penalties(penalties, rng);
    stats.deltas.push_back(penalties.delta);
    ++stats.penalty_updates;
  };

  std::vector<int> all_routes(instance.m());
  std::iota(all_routes.begin(), all_routes.end(), 0);

  Solution s0 = config.initial == InitialHeuristic::h1
                    ? heuristic1(instance)
                    : heuristic2(instance, rng.split(0x48320000ULL), penalties, config.h2_trials);
  Solution s = improve(instance, s0, all_routes, config.ls_mode, config.focus, penalties);

  std::optional<Solution> best;
  std::optional<Solution> best_adjusted;
  auto record = [&](int iteration, const Solution& sol, const char* kind) {
    const bool feasible = violation_free(instance, sol);
    stats.trace.push_back({iteration, cost_f1(instance, sol), evaluate(instance, sol, penalties),
                           feasible, kind});
  };
  if (violation_free(instance, s)) best = s;
  record(0, s, "initial");

  const ShakeContext ctx{instance, penalties, rng, config.h_max};
  const int count = static_cast<int>(sequence.size());
  int h = 0;
  for (int it = 1; it <= config.it_max; ++it) {
    stats.iterations = it;
    const ShakeResult shaken = shake(ctx, s, sequence[h]);
    if (!shaken.applied()) {
      h = (h + 1) % count;
      continue;
    }
    ++stats.shakes_applied;

    const double f1_s = cost_f1(instance, s);
    const double f1_shaken = cost_f1(instance, shaken.solution);
    const bool search = config.ls_gate == LsGate::literal
                            ? f1_s < config.shake_accept_factor * f1_shaken
                            : f1_shaken < config.shake_accept_factor * f1_s;
    Solution next = shaken.solution;
    if (search) {
      next = improve(instance, shaken.solution, shaken.changed_routes, config.ls_mode,
                     config.focus, penalties);
      ++stats.local_searches;
    }

    const double f_next = evaluate(instance, next, penalties);
    const bool feasible = violation_free(instance, next);
    if (feasible && (!best || f_next < evaluate(instance, *best, penalties))) {
      best = next;
      s = std::move(next);
      h = 0;
      record(it, s, "best");
      bump_penalties();
      continue;
    }
    if (f_next < evaluate(instance, s, penalties)) {
      s = std::move(next);
      h = 0;
      record(it, s, "current");
      bump_penalties();
      if (config.adjust) {
        if (auto adjusted = adjust(instance, s, penalties, config)) {
          ++stats.adjust_invocations;
          if (violation_free(instance, adjusted->solution)) {
            ++stats.adjust_successes;
            const double f_adj = cost_f1(instance, adjusted->solution);
            if (!best_adjusted || f_adj < cost_f1(instance, *best_adjusted)) {
              best_adjusted = std::move(adjusted->solution);
              record(it, *best_adjusted, "adjusted");
            }
          }
        }
      }
      continue;
    }
    h = (h + 1) % count;
  }

  if (best && best_adjusted) {
    result.best = cost_f1(instance, *best) <= cost_f1(instance, *best_adjusted) ? best
                                                                                : best_adjusted;
  } else {
    result.best = best ? best : best_adjusted;
  }
  stats.final_penalties = penalties;
  stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

VnsResult run_vns(const Instance& instance, const VnsConfig& config) {
  Rng rng(config.seed);
  return run_vns(instance, config, rng);
}

}  // namespace darp
