#include "darp/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <ostream>

#include "CLI11.hpp"
#include "darp/bench.hpp"
#include "darp/instance_io.hpp"
#include "darp/oracle.hpp"
#include "darp/solution_io.hpp"
#include "darp/vns.hpp"

namespace darp::cli {

namespace {

struct SolveArgs {
  std::string instance;
  std::string algo = "algo13";
  std::uint64_t seed = 0;
  int iters = 0;
  std::string initial;
  std::string out;
};

struct BenchArgs {
  std::string suite;
  std::string algo = "algo13";
  int runs = 10;
  int keep_best = 5;
  std::string best_known;
  std::string report;
  int parallel = 1;
  int iters = 0;
  bool no_time = false;
  bool multidepot = false;
};

struct ConvertArgs {
  std::string in;
  std::string out;
  bool multidepot = false;
  std::string scheme;
  std::uint64_t seed = 0;
};

struct OracleArgs {
  std::string instance;
  int limit = 4;
  std::string out;
};

struct ValidateArgs {
  std::string file;
  std::string instance;
};

struct GenerateArgs {
  std::string kind = "random";
  int n = 3;
  int m = 2;
  int depots = 1;
  bool heterogeneous = false;
  bool large = false;
  std::uint64_t seed = 0;
  std::string out;
};

std::string fixed(double x, const char* fmt = "%.2f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

int do_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = read_instance_file(a.instance);
  VnsConfig config = named_config(a.algo);
  config.seed = a.seed;
  if (a.iters > 0) config.it_max = a.iters;
  if (a.initial == "H2" || a.initial == "h2") config.initial = InitialHeuristic::h2;
  const VnsResult result = run_vns(inst, config);
  if (!result.feasible()) {
    err << "Infeasible: no feasible solution found in " << result.stats.iterations
        << " iterations\n";
    return 2;
  }
  emit(a.out, write_solution(inst, *result.best), out);
  if (!a.out.empty() && a.out != "-") {
    out << inst.name << " " << config.name << " seed=" << a.seed
        << " f1=" << fixed(cost_f1(inst, *result.best), "%.4f")
        << " iterations=" << result.stats.iterations << "\n";
  }
  return 0;
}

int do_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::string dir = a.suite;
  if (dir.empty()) {
    const auto env = data_dir();
    if (!env) {
      err << "bench: no --suite given and DARP_DATA_DIR is not set\n";
      return 1;
    }
    dir = *env;
  }
  std::vector<Instance> instances;
  for (const auto& path : discover_instances(dir)) {
    Instance inst = read_instance_file(path);
    if (a.multidepot) inst = extend_multidepot(inst);
    // Rows and best-known values are keyed by file name.
    inst.name = std::filesystem::path(path).stem().string();
    instances.push_back(std::move(inst));
  }
  if (instances.empty()) {
    err << "bench: no instance files in " << dir << "\n";
    return 1;
  }
  std::map<std::string, double> known;
  if (!a.best_known.empty()) known = parse_best_known_csv(read_text_file(a.best_known));

  SuiteOptions options;
  options.runs = a.runs;
  options.keep_best = a.keep_best;
  options.parallel = a.parallel;
  if (a.iters > 0) options.it_max = a.iters;
  const BenchReport report = run_suite(instances, named_config(a.algo), options, known);
  for (const auto& w : report.warnings) err << "warning: " << w << "\n";

  const std::string csv = report_csv(report, !a.no_time);
  if (a.report.empty()) {
    out << csv;
  } else {
    const std::filesystem::path path(a.report);
    if (path.extension() == ".json") {
      write_text_file(a.report, report_json(report, !a.no_time));
    } else {
      write_text_file(a.report, csv);
      std::filesystem::path json_path = path;
      json_path.replace_extension(".json");
      write_text_file(json_path.string(), report_json(report, !a.no_time));
    }
  }
  return 0;
}

int do_convert(const ConvertArgs& a, std::ostream& out, std::ostream&) {
  Instance inst = read_instance_file(a.in);
  if (a.multidepot) inst = extend_multidepot(inst);
  if (!a.scheme.empty()) {
    Rng rng(a.seed);
    inst = heterogenize(inst, named_scheme(a.scheme), rng);
  }
  emit(a.out, write_canonical(inst), out);
  return 0;
}

int do_oracle(const OracleArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = read_instance_file(a.instance);
  const OracleResult result = solve_exact(inst, a.limit);
  if (result.status == OracleStatus::too_large) {
    err << "TooLarge: " << inst.n() << " requests exceed the limit of " << a.limit << "\n";
    return 1;
  }
  out << "status=" << to_string(result.status);
  if (result.status == OracleStatus::optimal) out << " cost=" << fixed(result.cost, "%.6f");
  if (result.exact_feasible) out << " exact_cost=" << fixed(result.exact_cost, "%.6f");
  out << " routes_checked=" << result.routes_checked << " schedule_gaps=" << result.schedule_gaps
      << "\n";
  if (!a.out.empty() && result.status == OracleStatus::optimal) {
    write_text_file(a.out, write_solution(inst, result.solution));
  }
  return result.status == OracleStatus::optimal ? 0 : 2;
}

int do_validate(const ValidateArgs& a, std::ostream& out, std::ostream& err) {
  const std::string text = read_text_file(a.file);
  const bool is_solution = text.find("\"darp-solution\"") != std::string::npos;
  if (!is_solution) {
    const Instance inst = read_instance_file(a.file);
    out << "valid instance " << inst.name << ": n=" << inst.n() << " m=" << inst.m()
        << " depots=" << inst.p() << "\n";
    return 0;
  }
  if (a.instance.empty()) {
    err << "validate: a solution file needs --instance\n";
    return 1;
  }
  const Instance inst = read_instance_file(a.instance);
  const auto problems = verify_solution_file(inst, text);
  for (const auto& p : problems) err << p << "\n";
  if (!problems.empty()) return 1;
  const Solution s = parse_solution(inst, text);
  out << "feasible solution f1=" << fixed(cost_f1(inst, s), "%.4f") << "\n";
  return 0;
}

int do_generate(const GenerateArgs& a, std::ostream& out, std::ostream&) {
  Rng rng(a.seed);
  Instance inst;
  if (a.kind == "third-set") {
    ThirdSetSpec spec;
    spec.n = a.n;
    spec.m = a.m;
    spec.depots = a.depots;
    spec.large = a.large;
    inst = synthetic_third_set(spec, rng);
  } else {
    RandomInstanceSpec spec;
    spec.n = a.n;
    spec.m = a.m;
    spec.depots = a.depots;
    spec.heterogeneous = a.heterogeneous;
    inst = random_instance(spec, rng);
  }
  emit(a.out, write_canonical(inst), out);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-depot dial-a-ride solver"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Run the VNS on one instance");
  s->add_option("--instance", solve.instance, "Instance file (canonical JSON or classic)")->required();
  s->add_option("--algo", solve.algo, "algo1 .. algo18")->capture_default_str();
  s->add_option("--seed", solve.seed, "Random seed")->capture_default_str();
  s->add_option("--iters", solve.iters, "Iteration budget (default: the algorithm's)");
  s->add_option("--initial", solve.initial, "Initial heuristic: H1 or H2");
  s->add_option("--out", solve.out, "Solution file (default: stdout)");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run an algorithm over a directory of instances");
  b->add_option("--suite", bench.suite, "Instance directory (default: $DARP_DATA_DIR)");
  b->add_option("--algo", bench.algo)->capture_default_str();
  b->add_option("--runs", bench.runs)->capture_default_str();
  b->add_option("--keep-best", bench.keep_best)->capture_default_str();
  b->add_option("--best-known", bench.best_known, "CSV of instance,opt");
  b->add_option("--report", bench.report, "CSV report path; a .json report is written alongside");
  b->add_option("--parallel", bench.parallel)->capture_default_str();
  b->add_option("--iters", bench.iters, "Iteration budget override");
  b->add_flag("--no-time", bench.no_time, "Print '-' for times (reproducible reports)");
  b->add_flag("--multidepot", bench.multidepot, "Extend single-depot instances to four depots");

  ConvertArgs convert;
  auto* c = app.add_subcommand("convert", "Convert to canonical JSON");
  c->add_option("--in", convert.in)->required();
  c->add_option("--out", convert.out, "Output path (default: stdout)");
  c->add_flag("--multidepot", convert.multidepot, "Add the four standard depots");
  c->add_option("--heterogenize", convert.scheme, "Passenger/fleet scheme: U, E or I");
  c->add_option("--seed", convert.seed)->capture_default_str();

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "Exact solve of a tiny instance");
  o->add_option("--instance", oracle.instance)->required();
  o->add_option("--limit", oracle.limit)->capture_default_str();
  o->add_option("--out", oracle.out, "Write the optimal solution here");

  ValidateArgs validate;
  auto* v = app.add_subcommand("validate", "Check an instance or a solution file");
  v->add_option("file", validate.file)->required();
  v->add_option("--instance", validate.instance, "Instance of a solution file");

  GenerateArgs generate;
  auto* g = app.add_subcommand("generate", "Write a generated instance");
  g->add_option("--kind", generate.kind, "random or third-set")->capture_default_str();
  g->add_option("--n", generate.n)->capture_default_str();
  g->add_option("--m", generate.m)->capture_default_str();
  g->add_option("--depots", generate.depots)->capture_default_str();
  g->add_flag("--heterogeneous", generate.heterogeneous);
  g->add_flag("--large", generate.large, "15 minute service times (third-set)");
  g->add_option("--seed", generate.seed)->capture_default_str();
  g->add_option("--out", generate.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (s->parsed()) return do_solve(solve, out, err);
    if (b->parsed()) return do_bench(bench, out, err);
    if (c->parsed()) return do_convert(convert, out, err);
    if (o->parsed()) return do_oracle(oracle, out, err);
    if (v->parsed()) return do_validate(validate, out, err);
    if (g->parsed()) return do_generate(generate, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("darp");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace darp::cli
