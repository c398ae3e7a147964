#include <doctest.h>

#include "swarmlift/config.hpp"
#include "swarmlift/scenario.hpp"
#include "swarmlift/trace.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(SWARMLIFT_CLI_PATH) + " " + args +
                          " >/dev/null 2>/dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

const char* kHoldConfig =
    "mission.mode = hold\n"
    "agent.count = 1\n"
    "agent.1.position = 0, 0, 10\n"
    "sim.dt = 2.5e-4\n"
    "sim.control_dt = 2.5e-4\n"
    "sim.interval = 0.1\n"
    "sim.trace_dt = 0.01\n"
    "sim.t_final = 0.2\n";

}  // namespace

TEST_CASE("version flag and bad invocations") {
  CHECK(run_cli("--version") == 0);
  CHECK(run_cli("") == 2);                  // a subcommand is required
  CHECK(run_cli("run") == 2);               // config path is required
  CHECK(run_cli("frobnicate x.cfg") == 2);  // unknown subcommand
  CHECK(run_cli("run /tmp/no_such_swarmlift_config.cfg") == 2);
}

TEST_CASE("generated scenario validates clean through the cli") {
  const std::string gen = "/tmp/swarmlift_cli_gen.cfg";
  const std::string gen2 = "/tmp/swarmlift_cli_gen_stdout.cfg";
  CHECK(run_cli("gen-scenario --out " + gen) == 0);
  // Stdout emission matches the file output byte for byte.
  const std::string cmd = std::string(SWARMLIFT_CLI_PATH) +
                          " gen-scenario > " + gen2 + " 2>/dev/null";
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(slurp(gen) == slurp(gen2));

  // The emitted text loads as the 20-agent mission and has no rule issues.
  auto cfg = swarmlift::config::KeyValueConfig::load(gen);
  const auto sc = swarmlift::sim::load_scenario(cfg);
  CHECK(sc.agent_count() == 20);
  CHECK(swarmlift::sim::validate_scenario(sc).empty());
  CHECK(run_cli("validate " + gen) == 0);
  std::remove(gen.c_str());
  std::remove(gen2.c_str());
}

TEST_CASE("validate reports rule violations with a nonzero exit") {
  const std::string path = "/tmp/swarmlift_cli_hold.cfg";
  write_file(path, kHoldConfig);
  CHECK(run_cli("validate " + path) == 0);
  CHECK(run_cli("validate " + path + " --flag sim.t_final=-1") == 2);
  CHECK(run_cli("validate " + path + " --flag bogus.key=1") == 2);
  std::remove(path.c_str());
}

TEST_CASE("run writes trace and metrics files that recompute identically") {
  const std::string cfg = "/tmp/swarmlift_cli_run.cfg";
  const std::string trace = "/tmp/swarmlift_cli_run.trace.csv";
  const std::string metrics = "/tmp/swarmlift_cli_run.metrics";
  const std::string metrics2 = "/tmp/swarmlift_cli_run.metrics2";
  write_file(cfg, kHoldConfig);

  CHECK(run_cli("run " + cfg + " --out " + trace + " --metrics " + metrics) ==
        0);
  std::ifstream in(trace);
  REQUIRE(in.good());
  const auto tr = swarmlift::sim::read_trace_csv(in);
  CHECK(tr.n_agents == 1);
  CHECK(tr.ticks.size() == 21);  // 0.2 s on the 0.01 s trace grid

  // The metrics subcommand reproduces the run's report byte for byte.
  CHECK(run_cli("metrics " + cfg + " --trace " + trace + " --out " +
                metrics2) == 0);
  CHECK(slurp(metrics) == slurp(metrics2));

  std::remove(cfg.c_str());
  std::remove(trace.c_str());
  std::remove(metrics.c_str());
  std::remove(metrics2.c_str());
}

TEST_CASE("seeded noisy runs are reproducible and seed-sensitive") {
  const std::string cfg = "/tmp/swarmlift_cli_seed.cfg";
  const std::string t1 = "/tmp/swarmlift_cli_seed1.csv";
  const std::string t2 = "/tmp/swarmlift_cli_seed2.csv";
  const std::string t3 = "/tmp/swarmlift_cli_seed3.csv";
  write_file(cfg, kHoldConfig);
  const std::string noisy = " --flag noise.measurement_scale=1.0";

  CHECK(run_cli("run " + cfg + noisy + " --seed 5 --out " + t1) == 0);
  CHECK(run_cli("run " + cfg + noisy + " --seed 5 --out " + t2) == 0);
  CHECK(run_cli("run " + cfg + noisy + " --seed 6 --out " + t3) == 0);
  CHECK(slurp(t1) == slurp(t2));
  CHECK(slurp(t1) != slurp(t3));

  std::remove(cfg.c_str());
  std::remove(t1.c_str());
  std::remove(t2.c_str());
  std::remove(t3.c_str());
}

TEST_CASE("runtime aborts exit with the abort code") {
  // A payload directly above the quad demands a downward thrust axis; the
  // desired-state assembly rejects that at t = 0.
  const std::string cfg = "/tmp/swarmlift_cli_abort.cfg";
  write_file(cfg, std::string(kHoldConfig) +
                      "payload.enabled = true\n"
                      "payload.mass = 1\n"
                      "payload.position = 0, 0, 20\n"
                      "cable.stiffness = 100\n"
                      "cable.free_length = 1\n");
  CHECK(run_cli("validate " + cfg) == 0);
  CHECK(run_cli("run " + cfg) == 3);
  std::remove(cfg.c_str());
}

TEST_CASE("corrupt traces make the metrics subcommand abort") {
  const std::string cfg = "/tmp/swarmlift_cli_m.cfg";
  const std::string bad = "/tmp/swarmlift_cli_bad.csv";
  write_file(cfg, kHoldConfig);
  write_file(bad, "this is not a trace\n");
  CHECK(run_cli("metrics " + cfg + " --trace " + bad) == 3);
  CHECK(run_cli("metrics " + cfg + " --trace /tmp/missing_trace.csv") == 2);
  std::remove(cfg.c_str());
  std::remove(bad.c_str());
}
