#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "darp/evaluation.hpp"
#include "darp/model.hpp"

namespace darp {

enum class LsMode { none, ls1, ls2, ls3 };
enum class FocusMode { off, plain, eight_step };

const char* to_string(LsMode mode);
const char* to_string(FocusMode mode);
std::optional<LsMode> parse_ls_mode(std::string_view text);
std::optional<FocusMode> parse_focus_mode(std::string_view text);

/// Pickup for inbound and unclassified requests, delivery for outbound.
int critical_node(const Instance& instance, int request);

/// Position (0..partial.size()) for `node` in `partial` that minimizes the
/// window violation, then the penalized cost, then the index.
int place_critical(const Instance& instance, int vehicle, std::span<const int> partial, int node,
                   const PenaltyState& penalties);

/// One pass of LS1/LS2/LS3 over route `v`. Requests are taken in the order
/// they appear on the route at the start of the pass.
void local_search_route(const Instance& instance, Solution& solution, int v, LsMode mode,
                        const PenaltyState& penalties);

Solution local_search(const Instance& instance, const Solution& solution,
                      std::span<const int> routes, LsMode mode, const PenaltyState& penalties);

/// Maximal stretches of `nodes` that start and end with an empty vehicle,
/// as lists of requests in pickup order.
std::vector<std::vector<int>> zero_load_segments(const Instance& instance,
                                                 std::span<const int> nodes);

/// Re-inserts every zero-load segment of route `v` with best_insertion and
/// keeps the result only if the route's cost strictly drops. Insertions are
/// scored with the eight-step schedule when `use_8step` is set and with the
/// earliest schedule otherwise; the keep/revert test always uses eight-step.
void focus_route(const Instance& instance, Solution& solution, int v, bool use_8step,
                 const PenaltyState& penalties);

Solution focus_local_search(const Instance& instance, const Solution& solution,
                            std::span<const int> routes, bool use_8step,
                            const PenaltyState& penalties);

/// `mode` pass followed by the Focus pass on each listed route.
Solution improve(const Instance& instance, const Solution& solution, std::span<const int> routes,
                 LsMode mode, FocusMode focus, const PenaltyState& penalties);

}  // namespace darp
