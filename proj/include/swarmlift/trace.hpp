#pragma once

#include "swarmlift/types.hpp"

#include <iosfwd>
#include <vector>

namespace swarmlift::sim {

struct AgentSample {
  Vec12 actual = Vec12::Zero();
  Vec12 estimated = Vec12::Zero();
  Vec12 desired = Vec12::Zero();
  Vec4 input = Vec4::Zero();
  double cable_tension = 0.0;  ///< actual spring force magnitude, N
};

struct PayloadSample {
  Vec3 position = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
  /// Norm of the most recent allocation's summed-force component off the
  /// load axis.
  double allocation_residual = 0.0;
};

struct TraceTick {
  double t = 0.0;
  std::vector<AgentSample> agents;
  PayloadSample payload;
};

struct Trace {
  int n_agents = 0;
  bool has_payload = false;
  std::vector<TraceTick> ticks;
};

/// One row per agent per tick plus one payload row per tick when a payload
/// is present.  All numbers use %.17g, so a written trace reads back
/// bit-exactly.
void write_trace_csv(const Trace& trace, std::ostream& out);

/// Inverse of write_trace_csv.  Throws SimError on malformed input.
Trace read_trace_csv(std::istream& in);

}  // namespace swarmlift::sim
