#include "darp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace darp {

double gap_percent(double cost, double opt) { return (cost - opt) / opt * 100.0; }

std::map<std::string, double> parse_best_known_csv(std::string_view text) {
  std::map<std::string, double> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("best-known line " + std::to_string(number) + ": expected 'instance,opt'");
    }
    const std::string name = line.substr(0, comma);
    const std::string value = line.substr(comma + 1);
    char* end = nullptr;
    const double opt = std::strtod(value.c_str(), &end);
    if (end == value.c_str()) {
      if (number == 1) continue;  // header
      throw std::invalid_argument("best-known line " + std::to_string(number) + ": bad value '" + value + "'");
    }
    out[name] = opt;
  }
  return out;
}

BenchReport run_suite(const std::vector<Instance>& instances, const VnsConfig& config,
                      const SuiteOptions& options,
                      const std::map<std::string, double>& best_known) {
  if (options.runs < 1 || options.keep_best < 1 || options.keep_best > options.runs) {
    throw std::invalid_argument("run_suite: need runs >= keep_best >= 1");
  }
  std::vector<std::uint64_t> seeds = options.seeds;
  if (seeds.empty()) {
    for (int i = 1; i <= options.runs; ++i) seeds.push_back(static_cast<std::uint64_t>(i));
  }
  if (static_cast<int>(seeds.size()) != options.runs) {
    throw std::invalid_argument("run_suite: seed count must equal runs");
  }

  const std::size_t jobs = instances.size() * seeds.size();
  std::vector<RunRecord> records(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t job = next++; job < jobs; job = next++) {
      const Instance& inst = instances[job / seeds.size()];
      VnsConfig cfg = config;
      cfg.seed = seeds[job % seeds.size()];
      if (options.it_max) cfg.it_max = *options.it_max;
      const VnsResult result = run_vns(inst, cfg);
      RunRecord& rec = records[job];
      rec.seed = cfg.seed;
      rec.feasible = result.feasible();
      rec.f1 = result.feasible() ? cost_f1(inst, *result.best) : 0.0;
      rec.seconds = result.stats.wall_seconds;
    }
  };
  const int threads = std::max(1, std::min<int>(options.parallel, static_cast<int>(jobs)));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<InstanceReport> rows;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    std::vector<RunRecord> runs(records.begin() + i * seeds.size(),
                                records.begin() + (i + 1) * seeds.size());
    std::optional<double> opt;
    const auto known = best_known.find(instances[i].name);
    if (known != best_known.end()) opt = known->second;
    rows.push_back(summarize_instance(instances[i].name, instances[i].n(), instances[i].m(),
                                      config.name, std::move(runs), options.keep_best, opt));
  }
  return aggregate(config.name, std::move(rows));
}

InstanceReport summarize_instance(std::string instance, int n, int m, std::string algo,
                                  std::vector<RunRecord> runs, int keep_best,
                                  std::optional<double> opt) {
  InstanceReport ir;
  ir.instance = std::move(instance);
  ir.n = n;
  ir.m = m;
  ir.algo = std::move(algo);
  ir.runs = std::move(runs);
  ir.opt = opt;
  for (const auto& r : ir.runs) {
    if (r.feasible) ir.kept.push_back(r);
  }
  std::stable_sort(ir.kept.begin(), ir.kept.end(),
                   [](const RunRecord& a, const RunRecord& b) { return a.f1 < b.f1; });
  if (static_cast<int>(ir.kept.size()) > keep_best) ir.kept.resize(keep_best);
  if (ir.kept.empty()) {
    ir.no_feasible_run = true;
    return ir;
  }
  double total = 0.0, time = 0.0;
  for (const auto& r : ir.kept) {
    total += r.f1;
    time += r.seconds;
  }
  ir.av_cost = total / ir.kept.size();
  ir.min_cost = ir.kept.front().f1;
  ir.time_s = time / ir.kept.size();
  if (ir.opt) {
    ir.av_gap = gap_percent(ir.av_cost, *ir.opt);
    ir.min_gap = gap_percent(ir.min_cost, *ir.opt);
  }
  return ir;
}

BenchReport aggregate(std::string algo, std::vector<InstanceReport> rows) {
  BenchReport report;
  report.algo = std::move(algo);
  double sum_av = 0.0, sum_min = 0.0, sum_time = 0.0, sum_av_gap = 0.0, sum_min_gap = 0.0;
  int counted = 0, gapped = 0;
  for (auto& ir : rows) {
    if (ir.no_feasible_run) {
      report.warnings.push_back("NoFeasibleRun: " + ir.instance + " had no feasible run");
    } else {
      sum_av += ir.av_cost;
      sum_min += ir.min_cost;
      sum_time += ir.time_s;
      ++counted;
      if (ir.av_gap && ir.min_gap) {
        sum_av_gap += *ir.av_gap;
        sum_min_gap += *ir.min_gap;
        ++gapped;
      }
    }
    report.instances.push_back(std::move(ir));
  }
  if (counted > 0) {
    report.av_cost = sum_av / counted;
    report.min_cost = sum_min / counted;
    report.time_s = sum_time / counted;
  }
  if (gapped > 0) {
    report.av_gap = sum_av_gap / gapped;
    report.min_gap = sum_min_gap / gapped;
  }
  return report;
}

namespace {

std::string fixed2(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string maybe(const std::optional<double>& x) { return x ? fixed2(*x) : "-"; }

}  // namespace

std::string report_csv(const BenchReport& report, bool include_time) {
  std::ostringstream os;
  os << "instance,n,m,algo,av_cost,min_cost,time_s,av_gap,min_gap\n";
  for (const auto& ir : report.instances) {
    os << ir.instance << ',' << ir.n << ',' << ir.m << ',' << ir.algo << ',';
    if (ir.no_feasible_run) {
      os << "-,-,-,-,-\n";
      continue;
    }
    os << fixed2(ir.av_cost) << ',' << fixed2(ir.min_cost) << ','
       << (include_time ? fixed2(ir.time_s) : "-") << ',' << maybe(ir.av_gap) << ','
       << maybe(ir.min_gap) << '\n';
  }
  os << "average,-,-," << report.algo << ',' << fixed2(report.av_cost) << ','
     << fixed2(report.min_cost) << ',' << (include_time ? fixed2(report.time_s) : "-") << ','
     << maybe(report.av_gap) << ',' << maybe(report.min_gap) << '\n';
  return os.str();
}

std::string report_json(const BenchReport& report, bool include_time) {
  using nlohmann::json;
  auto opt = [](const std::optional<double>& x) { return x ? json(*x) : json(nullptr); };
  json doc;
  doc["algo"] = report.algo;
  json rows = json::array();
  for (const auto& ir : report.instances) {
    json runs = json::array();
    for (const auto& r : ir.runs) {
      json run = {{"seed", r.seed}, {"feasible", r.feasible}, {"f1", r.f1}};
      if (include_time) run["seconds"] = r.seconds;
      runs.push_back(run);
    }
    json row = {{"instance", ir.instance}, {"n", ir.n},          {"m", ir.m},
                {"opt", opt(ir.opt)},      {"runs", runs},       {"kept", ir.kept.size()},
                {"av_gap", opt(ir.av_gap)}, {"min_gap", opt(ir.min_gap)},
                {"no_feasible_run", ir.no_feasible_run}};
    row["av_cost"] = ir.no_feasible_run ? json(nullptr) : json(ir.av_cost);
    row["min_cost"] = ir.no_feasible_run ? json(nullptr) : json(ir.min_cost);
    if (include_time) row["time_s"] = ir.time_s;
    rows.push_back(row);
  }
  doc["instances"] = rows;
  doc["average"] = {{"av_cost", report.av_cost},
                    {"min_cost", report.min_cost},
                    {"av_gap", opt(report.av_gap)},
                    {"min_gap", opt(report.min_gap)}};
  if (include_time) doc["average"]["time_s"] = report.time_s;
  doc["warnings"] = report.warnings;
  return doc.dump(1) + "\n";
}

std::vector<std::string> discover_instances(const std::string& dir) {
  std::vector<std::string> out;
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw std::invalid_argument("not a directory: " + dir);
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension().string();
    if (ext == ".json" || ext == ".txt" || ext == ".dat") out.push_back(entry.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> data_dir() {
  const char* env = std::getenv("DARP_DATA_DIR");
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::string(env);
}

}  // namespace darp
