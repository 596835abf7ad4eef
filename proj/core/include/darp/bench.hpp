#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "darp/model.hpp"
#include "darp/vns.hpp"

namespace darp {

/// (cost - opt) / opt * 100.
double gap_percent(double cost, double opt);

/// "instance,opt" rows; a header line and blank lines are skipped.
std::map<std::string, double> parse_best_known_csv(std::string_view text);

struct RunRecord {
  std::uint64_t seed = 0;
  bool feasible = false;
  double f1 = 0.0;
  double seconds = 0.0;
};

struct InstanceReport {
  std::string instance;
  int n = 0;
  int m = 0;
  std::string algo;
  std::vector<RunRecord> runs;  // every run, in seed order
  std::vector<RunRecord> kept;  // best feasible runs by f1
  double av_cost = 0.0;
  double min_cost = 0.0;
  double time_s = 0.0;  // mean over kept runs
  std::optional<double> opt;
  std::optional<double> av_gap;
  std::optional<double> min_gap;
  bool no_feasible_run = false;
};

struct BenchReport {
  std::string algo;
  std::vector<InstanceReport> instances;
  double av_cost = 0.0;
  double min_cost = 0.0;
  double time_s = 0.0;
  std::optional<double> av_gap;
  std::optional<double> min_gap;
  std::vector<std::string> warnings;
};

struct SuiteOptions {
  int runs = 10;
  int keep_best = 5;
  std::vector<std::uint64_t> seeds;  // defaults to 1..runs
  int parallel = 1;
  std::optional<int> it_max;  // overrides the config's budget
};

/// Runs `config` once per (instance, seed) and aggregates the keep_best
/// lowest-f1 feasible runs per instance. Instances without a feasible run
/// are flagged and left out of the averages.
BenchReport run_suite(const std::vector<Instance>& instances, const VnsConfig& config,
                      const SuiteOptions& options,
                      const std::map<std::string, double>& best_known = {});

/// Keeps the `keep_best` lowest-f1 feasible runs and computes the row's
/// averages and gaps against `opt`.
InstanceReport summarize_instance(std::string instance, int n, int m, std::string algo,
                                  std::vector<RunRecord> runs, int keep_best,
                                  std::optional<double> opt = std::nullopt);

/// Suite-wide averages over rows with a feasible run; gap averages cover
/// rows with a reference value only.
BenchReport aggregate(std::string algo, std::vector<InstanceReport> rows);

/// Columns instance,n,m,algo,av_cost,min_cost,time_s,av_gap,min_gap plus a
/// final "average" row. A missing reference prints "-" in the gap columns.
/// With `include_time` false the time column is "-" so reruns with the same
/// seeds give byte-identical files.
std::string report_csv(const BenchReport& report, bool include_time = true);
std::string report_json(const BenchReport& report, bool include_time = true);

/// Instance files (.json, .txt) directly inside `dir`, sorted by name.
std::vector<std::string> discover_instances(const std::string& dir);

/// $DARP_DATA_DIR, if set and non-empty.
std::optional<std::string> data_dir();

}  // namespace darp
