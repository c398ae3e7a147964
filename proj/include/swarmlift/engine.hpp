#pragma once

#include "swarmlift/desired_state.hpp"
#include "swarmlift/guidance.hpp"
#include "swarmlift/lqg.hpp"
#include "swarmlift/noise.hpp"
#include "swarmlift/scenario.hpp"
#include "swarmlift/tension.hpp"
#include "swarmlift/trace.hpp"

#include <vector>

namespace swarmlift::sim {

/// Closed-loop simulation: plant integration on a fixed RK4 grid,
/// zero-order-hold control at the tick rate, desired-state refresh and gain
/// design at interval boundaries, deterministic counter-keyed noise.
class Engine {
 public:
  explicit Engine(const ScenarioConfig& sc);

  /// Runs the mission and returns the recorded trace.  Throws SimError
  /// subclasses with agent/time context on dynamic failures.
  Trace run();

 private:
  struct AgentCtl {
    guidance::BarycentricWeights weights;
    bool leader = false;
    int leader_slot = -1;
    desired::Assembly active;     ///< current desired assembly
    bool has_active = false;
    lqg::LinearModel model;
    lqg::GainSet gains;
    bool has_gains = false;
    Vec12 dxhat = Vec12::Zero();
    Vec4 input = Vec4::Zero();    ///< applied input, held over the tick
    Vec12 desired_now = Vec12::Zero();
    Vec12 measured_dev = Vec12::Zero();
  };

  // layout helpers into the flat plant state
  double* agent_state(int i) { return flat_.data() + 12 * i; }
  const double* agent_state(int i) const { return flat_.data() + 12 * i; }
  Vec3 agent_position(const std::vector<double>& y, int i) const;
  Vec3 payload_position_of(const std::vector<double>& y) const;
  Vec3 payload_velocity_of(const std::vector<double>& y) const;

  void initialize();
  void sample_noise(std::uint64_t tick);
  void boundary_update(double t, int k);
  void refresh_assemblies(double t, double chain_dt, bool first,
                          bool design_gains, bool rebase);
  guidance::PosVel desired_pos_vel(int i, double t) const;
  Vec3 plant_quad_position(const std::vector<double>& y, int i,
                           double t) const;
  Vec3 allocator_quad_position(int i, double t) const;
  Vec3 spring_force_on_quad(const std::vector<double>& y, int i,
                            double t) const;
  Vec12 desired_state_at(const AgentCtl& a, int i, double t) const;
  void derivative(double t, const std::vector<double>& y,
                  std::vector<double>& dy) const;
  void advance_plant(double t);
  void record(double t, Trace& trace) const;
  void design_single_linearization();

  ScenarioConfig sc_;
  int n_ = 0;
  bool payload_ = false;
  int n_sub_ = 1;
  NoiseStream noise_;
  Mat3 chol_payload_force_ = Mat3::Zero();
  Mat3 chol_position_ = Mat3::Zero();
  Mat12 chol_measurement_ = Mat12::Zero();

  std::vector<double> flat_;
  std::vector<AgentCtl> agents_;
  Vec3 payload_disturbance_ = Vec3::Zero();
  std::vector<Vec3> position_noise_;
  double residual_last_ = 0.0;
  std::vector<double> allocated_tension_;

  std::vector<double> k1_, k2_, k3_, k4_, stage_;
};

/// Builds an engine and runs it.
Trace run_scenario(const ScenarioConfig& sc);

}  // namespace swarmlift::sim
