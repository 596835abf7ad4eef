#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "darp/evaluation.hpp"
#include "darp/model.hpp"

namespace darp {

inline constexpr std::string_view kSolutionFormat = "darp-solution";

/// Routes, node sequences and the eight-step schedule of each route.
std::string write_solution(const Instance& instance, const Solution& solution);

/// Route sequences only; schedules in the file are ignored here.
Solution parse_solution(const Instance& instance, std::string_view json_text);

/// Checks the schedules stored in a solution file directly against the
/// model constraints, without re-running any scheduler. Returns one line
/// per problem; empty when the file is consistent and feasible.
std::vector<std::string> verify_solution_file(const Instance& instance, std::string_view json_text);

}  // namespace darp
