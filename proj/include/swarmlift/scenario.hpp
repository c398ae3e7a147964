#pragma once

#include "swarmlift/config.hpp"
#include "swarmlift/guidance.hpp"
#include "swarmlift/lqg.hpp"
#include "swarmlift/payload_cable.hpp"
#include "swarmlift/rigid_body.hpp"
#include "swarmlift/types.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace swarmlift::sim {

/// In continuum mode three leaders follow the waypoint schedule and the
/// rest track their barycentric combination; in hold mode every agent holds
/// its initial position (no leaders, no schedule).
enum class MissionMode { continuum, hold };

/// Source of the desired cable-force feedforward entering the desired
/// thrust/attitude: the interval allocator's tension share, or the current
/// spring force.
enum class FeedforwardSource { allocated, spring };

/// How often the desired thrust/attitude assembly is refreshed.
enum class FeedforwardRate { interval, tick };

/// Quad positions used when evaluating spring forces: the simulated ones or
/// the desired trajectory.
enum class CablePositionSource { actual, desired };

/// Where the cable-geometry position perturbation is injected: into the
/// allocator's payload-acceleration/geometry evaluation only, or into the
/// plant's spring forces as well.
enum class PositionNoiseTarget { allocator, plant };

struct AgentSetup {
  Vec3 initial_position = Vec3::Zero();
};

struct NoiseSetup {
  double payload_force_scale = 0.0;
  double position_scale = 0.0;
  double measurement_scale = 0.0;
  Mat3 payload_force_cov;
  Mat3 position_cov;
  PositionNoiseTarget position_target = PositionNoiseTarget::allocator;
};

struct ControlSetup {
  bool feedback = true;
  FeedforwardSource ff_source = FeedforwardSource::spring;
  FeedforwardRate ff_rate = FeedforwardRate::tick;
  bool single_linearization = false;
  double linearization_time = 10.0;
  bool literal_innovation = false;
};

struct ScenarioConfig {
  double dt_sim = 0.01;
  double dt_ctrl = 0.01;
  double interval_dt = 1.0;
  double trace_dt = 0.01;
  double t_final = 20.0;
  std::uint64_t seed = 1;

  MissionMode mode = MissionMode::continuum;
  dynamics::QuadParams quad;
  std::vector<AgentSetup> agents;
  std::array<int, 3> leaders = {0, 1, 2};  ///< agent indices, 0-based
  guidance::WaypointSchedule schedule;
  bool start_on_trajectory = true;

  bool payload_enabled = false;
  payload::PayloadParams payload_params;
  Vec3 payload_position = Vec3::Zero();
  Vec3 payload_velocity = Vec3::Zero();
  std::vector<payload::CableSpec> cables;
  bool allow_compression = false;
  CablePositionSource cable_position_source = CablePositionSource::actual;

  ControlSetup control;
  lqg::Weights weights;
  NoiseSetup noise;

  int agent_count() const { return static_cast<int>(agents.size()); }
  bool is_leader(int i) const {
    return i == leaders[0] || i == leaders[1] || i == leaders[2];
  }
};

struct ValidationIssue {
  std::string path;
  std::string message;
};

/// Builds a scenario from parsed key/value entries.  Structural problems
/// (bad types, missing required keys) throw ConfigError; semantic rule
/// violations are returned by validate_scenario.
ScenarioConfig load_scenario(config::KeyValueConfig& cfg);

/// Checks every scenario rule (timing grid, leader geometry, schedule
/// monotonicity, parameter signs, weight matrix definiteness, cable
/// consistency) and reports all violations.
std::vector<ValidationIssue> validate_scenario(const ScenarioConfig& sc);

/// Unknown-key issues from the parse (call after load_scenario).
std::vector<ValidationIssue> unknown_key_issues(
    const config::KeyValueConfig& cfg);

/// The 20-quad channel-transit mission with the slung payload: formation
/// per the reference tables, one 20 s waypoint interval, payload hanging in
/// static equilibrium below the fleet centroid with cords pre-stretched 1 %.
ScenarioConfig make_canonical_scenario();

/// Serializes a scenario to config text that load_scenario reads back.
std::string serialize_scenario(const ScenarioConfig& sc);

/// One-line echo of the scenario's switch settings for reports.
std::string describe_flags(const ScenarioConfig& sc);

}  // namespace swarmlift::sim
