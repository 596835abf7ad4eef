#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "darp/evaluation.hpp"
#include "darp/model.hpp"
#include "darp/rng.hpp"

namespace darp {

enum class NeighborhoodKind { swap, repairing_move, move, chain, eliminate, intra_move };

/// Short tag: S, RM, M, C, E, IM.
const char* tag(NeighborhoodKind kind);

struct NeighborhoodSpec {
  NeighborhoodKind kind = NeighborhoodKind::swap;
  int size = 1;  // h; 0 for intra_move

  std::string name() const;  // e.g. "S1", "RM3", "IM"
  friend bool operator==(const NeighborhoodSpec&, const NeighborhoodSpec&) = default;
};

class EmptyNeighborhoodSet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// S1-RM1-M1-C1-E1-S2-...-E_hmax followed by IM, filtered to `kinds`.
std::vector<NeighborhoodSpec> neighborhood_sequence(const std::vector<NeighborhoodKind>& kinds,
                                                    int h_max);

enum class ShakeStatus { applied, no_move, not_applicable };

struct ShakeResult {
  ShakeStatus status = ShakeStatus::no_move;
  Solution solution;
  std::vector<int> changed_routes;  // routes whose sequence differs from the input

  bool applied() const { return status == ShakeStatus::applied; }
};

struct ShakeContext {
  const Instance& instance;
  const PenaltyState& penalties;
  Rng& rng;
  int h_max = 1;
};

/// Retry budget for swap/chain sequence draws that hit incompatible vehicles.
inline constexpr int kShakeRetries = 50;

ShakeResult shake_swap(const ShakeContext& ctx, const Solution& solution, int h);
ShakeResult shake_move(const ShakeContext& ctx, const Solution& solution, int h);
ShakeResult shake_repairing_move(const ShakeContext& ctx, const Solution& solution, int h);
ShakeResult shake_chain(const ShakeContext& ctx, const Solution& solution, int h);
ShakeResult shake_eliminate(const ShakeContext& ctx, const Solution& solution);
ShakeResult shake_intra_move(const ShakeContext& ctx, const Solution& solution);

ShakeResult shake(const ShakeContext& ctx, const Solution& solution, const NeighborhoodSpec& spec);

std::vector<int> changed_routes(const Solution& before, const Solution& after);

}  // namespace darp
