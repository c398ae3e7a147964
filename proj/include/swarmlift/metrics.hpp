#pragma once

#include "swarmlift/scenario.hpp"
#include "swarmlift/trace.hpp"
#include "swarmlift/types.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace swarmlift::sim {

/// Deviation statistics for one agent, accumulated over the trace with the
/// final tick excluded.  Covariances are raw second moments of
/// (actual - desired); the mean is not subtracted.
struct AgentMetrics {
  Mat12 q_actual = Mat12::Zero();
  Mat3 q_pos = Mat3::Zero();
  Mat3 q_euler = Mat3::Zero();
  Vec3 pos_eigenvalues = Vec3::Zero();   ///< ascending
  Mat3 pos_eigenvectors = Mat3::Zero();  ///< columns match eigenvalues
  Vec3 euler_eigenvalues = Vec3::Zero();
  double rms_pos_error = 0.0;
  double max_pos_error = 0.0;
};

struct MetricsReport {
  std::vector<AgentMetrics> agents;
  int samples_used = 0;
  double min_inter_agent_distance = 0.0;
  bool has_containment = false;
  double containment_min_weight = 0.0;
  double containment_max_drift = 0.0;
  std::string flags;
};

/// Recomputes every follower's weights against the desired leading triangle
/// at each tick from its actual position; reports the minimum weight seen
/// and the largest drift from the initial weights.
void containment_check(const Trace& trace, const ScenarioConfig& sc,
                       double* min_weight, double* max_drift);

MetricsReport compute_metrics(const Trace& trace, const ScenarioConfig& sc);

void write_metrics(const MetricsReport& report, std::ostream& out);

}  // namespace swarmlift::sim
