#include "darp/shaking.hpp"

#include <algorithm>

#include "darp/construction.hpp"

namespace darp {

const char* tag(NeighborhoodKind kind) {
  switch (kind) {
    case NeighborhoodKind::swap: return "S";
    case NeighborhoodKind::repairing_move: return "RM";
    case NeighborhoodKind::move: return "M";
    case NeighborhoodKind::chain: return "C";
    case NeighborhoodKind::eliminate: return "E";
    case NeighborhoodKind::intra_move: return "IM";
  }
  return "?";
}

std::string NeighborhoodSpec::name() const {
  if (kind == NeighborhoodKind::intra_move) return tag(kind);
  return std::string(tag(kind)) + std::to_string(size);
}

std::vector<NeighborhoodSpec> neighborhood_sequence(const std::vector<NeighborhoodKind>& kinds,
                                                    int h_max) {
  auto used = [&kinds](NeighborhoodKind k) {
    return std::find(kinds.begin(), kinds.end(), k) != kinds.end();
  };
  static constexpr NeighborhoodKind kSized[] = {
      NeighborhoodKind::swap, NeighborhoodKind::repairing_move, NeighborhoodKind::move,
      NeighborhoodKind::chain, NeighborhoodKind::eliminate};
  std::vector<NeighborhoodSpec> out;
  for (int h = 1; h <= h_max; ++h) {
    for (NeighborhoodKind k : kSized) {
      if (used(k)) out.push_back({k, h});
    }
  }
  if (used(NeighborhoodKind::intra_move)) out.push_back({NeighborhoodKind::intra_move, 0});
  if (out.empty()) throw EmptyNeighborhoodSet("EmptyNeighborhoodSet: no neighborhoods selected");
  return out;
}

std::vector<int> changed_routes(const Solution& before, const Solution& after) {
  std::vector<int> out;
  for (int v = 0; v < after.size(); ++v) {
    if (before.nodes(v) != after.nodes(v)) out.push_back(v);
  }
  return out;
}

namespace {

ShakeResult no_move(const Solution& s) { return {ShakeStatus::no_move, s, {}}; }

ShakeResult applied(const Solution& before, Solution after) {
  ShakeResult out{ShakeStatus::applied, std::move(after), {}};
  out.changed_routes = changed_routes(before, out.solution);
  return out;
}

std::vector<int> nonempty_routes(const Solution& s) {
  std::vector<int> out;
  for (int v = 0; v < s.size(); ++v) {
    if (!s.nodes(v).empty()) out.push_back(v);
  }
  return out;
}

/// Consecutive requests (in pickup order) of route `v`, length <= h.
std::vector<int> draw_sequence(const ShakeContext& ctx, const Solution& s, int v, int h) {
  const std::vector<int> reqs = requests_on(ctx.instance, s.nodes(v));
  const int count = static_cast<int>(reqs.size());
  const int len = ctx.rng.uniform_int(1, std::min(h, count));
  const int start = ctx.rng.uniform_int(0, count - len);
  return {reqs.begin() + start, reqs.begin() + start + len};
}

bool all_compatible(const Instance& inst, const std::vector<int>& reqs, int v) {
  return std::all_of(reqs.begin(), reqs.end(), [&](int r) { return inst.compatible(r, v); });
}

void remove_requests(const ShakeContext& ctx, Solution& s, int v, const std::vector<int>& reqs) {
  std::vector<int> nodes = s.nodes(v);
  for (int r : reqs) erase_request(ctx.instance, nodes, r);
  s.set_nodes(v, std::move(nodes));
}

void insert_requests(const ShakeContext& ctx, Solution& s, int v, const std::vector<int>& reqs) {
  for (int r : reqs) insert_best(ctx.instance, s, v, r, ctx.penalties);
}

std::vector<int> destinations(const Instance& inst, const Solution& s, int request, int exclude) {
  std::vector<int> out;
  for (int v = 0; v < s.size(); ++v) {
    if (v != exclude && inst.compatible(request, v)) out.push_back(v);
  }
  return out;
}

ShakeResult move_from(const ShakeContext& ctx, const Solution& solution, int h,
                      const std::vector<int>& candidates) {
  if (candidates.empty()) return no_move(solution);
  const int count = std::min(ctx.rng.uniform_int(1, std::max(1, h)),
                             static_cast<int>(candidates.size()));
  const std::vector<int> chosen = ctx.rng.sample(candidates, count);
  std::vector<int> owner = solution.assignment(ctx.instance.n());
  Solution out = solution;
  for (int r : chosen) {
    const int from = owner[r];
    const std::vector<int> dests = destinations(ctx.instance, out, r, from);
    const int to = ctx.rng.pick(dests);
    remove_requests(ctx, out, from, {r});
    insert_best(ctx.instance, out, to, r, ctx.penalties);
    owner[r] = to;
  }
  return applied(solution, std::move(out));
}

}  // namespace

ShakeResult shake_swap(const ShakeContext& ctx, const Solution& solution, int h) {
  const std::vector<int> routes = nonempty_routes(solution);
  if (routes.size() < 2) return no_move(solution);
  for (int attempt = 0; attempt < kShakeRetries; ++attempt) {
    const std::vector<int> pair = ctx.rng.sample(routes, 2);
    const int a = pair[0];
    const int b = pair[1];
    const std::vector<int> seq_a = draw_sequence(ctx, solution, a, h);
    const std::vector<int> seq_b = draw_sequence(ctx, solution, b, h);
    if (!all_compatible(ctx.instance, seq_a, b) || !all_compatible(ctx.instance, seq_b, a)) continue;
    Solution out = solution;
    remove_requests(ctx, out, a, seq_a);
    remove_requests(ctx, out, b, seq_b);
    insert_requests(ctx, out, b, seq_a);
    insert_requests(ctx, out, a, seq_b);
    return applied(solution, std::move(out));
  }
  return no_move(solution);
}

ShakeResult shake_move(const ShakeContext& ctx, const Solution& solution, int h) {
  const Instance& inst = ctx.instance;
  if (inst.n() == 0 || solution.size() < 2) return no_move(solution);
  const std::vector<int> owner = solution.assignment(inst.n());
  std::vector<int> candidates;
  for (int r = 0; r < inst.n(); ++r) {
    if (owner[r] >= 0 && !destinations(inst, solution, r, owner[r]).empty()) candidates.push_back(r);
  }
  return move_from(ctx, solution, h, candidates);
}

ShakeResult shake_repairing_move(const ShakeContext& ctx, const Solution& solution, int h) {
  const Instance& inst = ctx.instance;
  std::vector<bool> infeasible(solution.size(), false);
  bool any = false;
  for (int v = 0; v < solution.size(); ++v) {
    infeasible[v] = !route_cost(inst, solution, v).violations.zero();
    any = any || infeasible[v];
  }
  if (!any) return {ShakeStatus::not_applicable, solution, {}};
  if (solution.size() < 2) return no_move(solution);
  const std::vector<int> owner = solution.assignment(inst.n());
  std::vector<int> candidates;
  for (int r = 0; r < inst.n(); ++r) {
    if (owner[r] >= 0 && infeasible[owner[r]] &&
        !destinations(inst, solution, r, owner[r]).empty()) {
      candidates.push_back(r);
    }
  }
  return move_from(ctx, solution, h, candidates);
}

ShakeResult shake_chain(const ShakeContext& ctx, const Solution& solution, int h) {
  if (solution.size() < 2) return no_move(solution);
  const std::vector<int> routes = nonempty_routes(solution);
  if (routes.empty()) return no_move(solution);
  Solution out = solution;
  int source = ctx.rng.pick(routes);
  int hops = 0;
  for (int hop = 0; hop < h; ++hop) {
    if (out.nodes(source).empty()) break;
    std::vector<int> seq;
    std::vector<int> dests;
    for (int attempt = 0; attempt < kShakeRetries && dests.empty(); ++attempt) {
      seq = draw_sequence(ctx, out, source, h);
      for (int v = 0; v < out.size(); ++v) {
        if (v != source && all_compatible(ctx.instance, seq, v)) dests.push_back(v);
      }
    }
    if (dests.empty()) break;
    const int dest = ctx.rng.pick(dests);
    remove_requests(ctx, out, source, seq);
    insert_requests(ctx, out, dest, seq);
    source = dest;
    ++hops;
  }
  if (hops == 0) return no_move(solution);
  return applied(solution, std::move(out));
}

ShakeResult shake_eliminate(const ShakeContext& ctx, const Solution& solution) {
  const Instance& inst = ctx.instance;
  if (solution.size() < 2) return no_move(solution);
  int victim = -1;
  double worst = -1.0;
  for (int v = 0; v < solution.size(); ++v) {
    const auto& nodes = solution.nodes(v);
    if (nodes.empty()) continue;
    const double ratio = route_cost(inst, solution, v).distance / (nodes.size() / 2.0);
    if (ratio > worst) {
      worst = ratio;
      victim = v;
    }
  }
  if (victim < 0) return no_move(solution);
  const std::vector<int> reqs = requests_on(inst, solution.nodes(victim));
  for (int r : reqs) {
    if (destinations(inst, solution, r, victim).empty()) return no_move(solution);
  }
  Solution out = solution;
  out.set_nodes(victim, {});
  for (int r : reqs) {
    const int to = ctx.rng.pick(destinations(inst, out, r, victim));
    insert_best(inst, out, to, r, ctx.penalties);
  }
  return applied(solution, std::move(out));
}

ShakeResult shake_intra_move(const ShakeContext& ctx, const Solution& solution) {
  const Instance& inst = ctx.instance;
  const std::vector<int> owner = solution.assignment(inst.n());
  std::vector<int> served;
  for (int r = 0; r < inst.n(); ++r) {
    if (owner[r] >= 0) served.push_back(r);
  }
  if (served.empty()) return no_move(solution);
  const int count = std::min(ctx.rng.uniform_int(1, std::max(1, ctx.h_max)),
                             static_cast<int>(served.size()));
  const std::vector<int> chosen = ctx.rng.sample(served, count);
  Solution out = solution;
  for (int r : chosen) remove_requests(ctx, out, owner[r], {r});
  for (int r : chosen) insert_best(inst, out, owner[r], r, ctx.penalties);
  return applied(solution, std::move(out));
}

ShakeResult shake(const ShakeContext& ctx, const Solution& solution, const NeighborhoodSpec& spec) {
  switch (spec.kind) {
    case NeighborhoodKind::swap: return shake_swap(ctx, solution, spec.size);
    case NeighborhoodKind::repairing_move: return shake_repairing_move(ctx, solution, spec.size);
    case NeighborhoodKind::move: return shake_move(ctx, solution, spec.size);
    case NeighborhoodKind::chain: return shake_chain(ctx, solution, spec.size);
    case NeighborhoodKind::eliminate: return shake_eliminate(ctx, solution);
    case NeighborhoodKind::intra_move: return shake_intra_move(ctx, solution);
  }
  return no_move(solution);
}

}  // namespace darp
