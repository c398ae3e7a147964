// Command-line front end: validate configs, run missions, recompute
// metrics from stored traces, and emit the canonical scenario.
//
// Exit codes: 0 success, 2 configuration/validation problem, 3 runtime
// abort inside the simulator.

#include "swarmlift/config.hpp"
#include "swarmlift/engine.hpp"
#include "swarmlift/kernels.hpp"
#include "swarmlift/metrics.hpp"
#include "swarmlift/scenario.hpp"
#include "swarmlift/trace.hpp"
#include "swarmlift/types.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr const char* kVersion = "swarmlift 1.0.0";

/// Relative output paths land in SWARMLIFT_OUT_DIR when it is set.
std::string resolve_output(const std::string& path) {
  const char* dir = std::getenv("SWARMLIFT_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(dir) / p).string();
}

std::ofstream open_output(const std::string& path) {
  const std::string resolved = resolve_output(path);
  std::ofstream out(resolved);
  if (!out) {
    throw swarmlift::ConfigError("cannot open output file '" + resolved + "'");
  }
  return out;
}

struct LoadedScenario {
  swarmlift::sim::ScenarioConfig sc;
  std::vector<swarmlift::sim::ValidationIssue> issues;
};

/// Parses the config file, applies overrides, builds the scenario, and
/// collects every validation issue (semantic rules plus unknown keys).
LoadedScenario load_and_validate(const std::string& config_path,
                                 const std::vector<std::string>& overrides) {
  swarmlift::config::KeyValueConfig cfg =
      swarmlift::config::KeyValueConfig::load(config_path);
  for (const std::string& ov : overrides) {
    cfg.set_override(ov);
  }
  LoadedScenario result;
  result.sc = swarmlift::sim::load_scenario(cfg);
  result.issues = swarmlift::sim::validate_scenario(result.sc);
  for (const auto& issue : swarmlift::sim::unknown_key_issues(cfg)) {
    result.issues.push_back(issue);
  }
  return result;
}

void print_issues(const std::vector<swarmlift::sim::ValidationIssue>& issues) {
  for (const auto& issue : issues) {
    std::cerr << "error: " << issue.path << ": " << issue.message << '\n';
  }
}

int cmd_validate(const std::string& config_path,
                 const std::vector<std::string>& overrides) {
  LoadedScenario loaded = load_and_validate(config_path, overrides);
  if (!loaded.issues.empty()) {
    print_issues(loaded.issues);
    std::cerr << loaded.issues.size() << " issue(s) found\n";
    return 2;
  }
  std::cout << "OK: " << loaded.sc.agent_count() << " agents, t_final "
            << loaded.sc.t_final << " s, " << loaded.sc.schedule.times.size()
            << " waypoints\n";
  std::cout << swarmlift::sim::describe_flags(loaded.sc) << '\n';
  return 0;
}

int cmd_run(const std::string& config_path,
            const std::vector<std::string>& overrides, bool seed_given,
            std::uint64_t seed, const std::string& trace_path,
            const std::string& metrics_path) {
  LoadedScenario loaded = load_and_validate(config_path, overrides);
  if (!loaded.issues.empty()) {
    print_issues(loaded.issues);
    return 2;
  }
  if (seed_given) loaded.sc.seed = seed;

  swarmlift::sim::Trace trace;
  try {
    trace = swarmlift::sim::run_scenario(loaded.sc);
  } catch (const swarmlift::ConfigError&) {
    throw;
  } catch (const swarmlift::SimError& e) {
    std::cerr << "abort: " << e.what() << '\n';
    return 3;
  }

  if (!trace_path.empty()) {
    std::ofstream out = open_output(trace_path);
    swarmlift::sim::write_trace_csv(trace, out);
    if (!out) {
      throw swarmlift::ConfigError("failed writing trace to '" + trace_path +
                                   "'");
    }
  }
  if (!metrics_path.empty()) {
    swarmlift::sim::MetricsReport report =
        swarmlift::sim::compute_metrics(trace, loaded.sc);
    std::ofstream out = open_output(metrics_path);
    swarmlift::sim::write_metrics(report, out);
  }
  std::cout << "run complete: " << trace.ticks.size() << " ticks, "
            << trace.n_agents << " agents, seed " << loaded.sc.seed
            << ", kernels "
            << swarmlift::kernels::backend_name(swarmlift::kernels::active())
            << '\n';
  return 0;
}

int cmd_metrics(const std::string& config_path,
                const std::vector<std::string>& overrides,
                const std::string& trace_path, const std::string& out_path) {
  LoadedScenario loaded = load_and_validate(config_path, overrides);
  if (!loaded.issues.empty()) {
    print_issues(loaded.issues);
    return 2;
  }
  std::ifstream in(trace_path);
  if (!in) {
    throw swarmlift::ConfigError("cannot open trace file '" + trace_path +
                                 "'");
  }
  swarmlift::sim::Trace trace;
  try {
    trace = swarmlift::sim::read_trace_csv(in);
  } catch (const swarmlift::SimError& e) {
    std::cerr << "abort: " << e.what() << '\n';
    return 3;
  }
  swarmlift::sim::MetricsReport report =
      swarmlift::sim::compute_metrics(trace, loaded.sc);
  if (out_path.empty()) {
    swarmlift::sim::write_metrics(report, std::cout);
  } else {
    std::ofstream out = open_output(out_path);
    swarmlift::sim::write_metrics(report, out);
  }
  return 0;
}

int cmd_gen_scenario(const std::string& out_path) {
  const swarmlift::sim::ScenarioConfig sc =
      swarmlift::sim::make_canonical_scenario();
  const std::string text = swarmlift::sim::serialize_scenario(sc);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out = open_output(out_path);
    out << text;
    if (!out) {
      throw swarmlift::ConfigError("failed writing scenario to '" + out_path +
                                   "'");
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "swarmlift: deterministic multi-quadcopter slung-payload simulator"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  std::uint64_t seed = 0;
  std::string trace_path;
  std::string metrics_path;
  std::string in_trace_path;
  std::string out_path;

  CLI::App* validate =
      app.add_subcommand("validate", "Parse a config and check every rule");
  validate->add_option("config", config_path, "scenario config file")
      ->required();
  validate->add_option("--flag", overrides,
                       "config override, key=value (repeatable)");

  CLI::App* run = app.add_subcommand("run", "Run a mission");
  run->add_option("config", config_path, "scenario config file")->required();
  CLI::Option* seed_opt =
      run->add_option("--seed", seed, "noise seed (overrides sim.seed)");
  run->add_option("--out", trace_path, "trace CSV output path");
  run->add_option("--metrics", metrics_path, "metrics report output path");
  run->add_option("--flag", overrides,
                  "config override, key=value (repeatable)");

  CLI::App* metrics = app.add_subcommand(
      "metrics", "Recompute the metrics report from a stored trace");
  metrics->add_option("config", config_path, "scenario config file")
      ->required();
  metrics->add_option("--trace", in_trace_path, "trace CSV to analyze")
      ->required();
  metrics->add_option("--out", out_path, "report output path (default stdout)");
  metrics->add_option("--flag", overrides,
                      "config override, key=value (repeatable)");

  CLI::App* gen = app.add_subcommand(
      "gen-scenario", "Emit the canonical 20-quad payload-transit scenario");
  gen->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(config_path, overrides);
    if (run->parsed()) {
      return cmd_run(config_path, overrides, seed_opt->count() > 0, seed,
                     trace_path, metrics_path);
    }
    if (metrics->parsed()) {
      return cmd_metrics(config_path, overrides, in_trace_path, out_path);
    }
    if (gen->parsed()) return cmd_gen_scenario(out_path);
  } catch (const swarmlift::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const swarmlift::SimError& e) {
    std::cerr << "abort: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "abort: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
