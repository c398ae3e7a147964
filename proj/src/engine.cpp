#include "swarmlift/engine.hpp"

#include "swarmlift/kernels.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace swarmlift::sim {

namespace {

std::string state_snapshot(const Vec12& s) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 12; ++i) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", s(i));
    os << (i ? " " : "") << buf;
  }
  os << "]";
  return os.str();
}

/// Reruns fn, prefixing any simulation error with caller context while
/// keeping the error's dynamic type for the common cases.
template <typename Fn>
auto with_context(const std::string& ctx, Fn&& fn) {
  try {
    return fn();
  } catch (const GimbalLock& e) {
    throw GimbalLock(ctx + e.what());
  } catch (const AttitudeOutOfRange& e) {
    throw AttitudeOutOfRange(ctx + e.what());
  } catch (const DegenerateForce& e) {
    throw DegenerateForce(ctx + e.what());
  } catch (const DegenerateGeometry& e) {
    throw DegenerateGeometry(ctx + e.what());
  } catch (const CoincidentEndpoints& e) {
    throw CoincidentEndpoints(ctx + e.what());
  } catch (const ZeroLoad& e) {
    throw ZeroLoad(ctx + e.what());
  } catch (const NotStabilizable& e) {
    throw NotStabilizable(ctx + e.what());
  } catch (const NonConvergence& e) {
    throw NonConvergence(ctx + e.what());
  } catch (const OutOfSchedule& e) {
    throw OutOfSchedule(ctx + e.what());
  } catch (const SimError& e) {
    throw SimError(ctx + e.what());
  }
}

std::string agent_ctx(int i, double t) {
  std::ostringstream os;
  os << "agent " << (i + 1) << " at t = " << t << ": ";
  return os.str();
}

int exact_ratio(double whole, double part, const char* what) {
  const double r = whole / part;
  const int n = static_cast<int>(std::lround(r));
  if (n < 1 || std::abs(r - n) > 1e-9 * std::max(1.0, std::abs(r)))
    throw ConfigError(std::string(what) + ": not an integer multiple");
  return n;
}

}  // namespace

Engine::Engine(const ScenarioConfig& sc) : sc_(sc), noise_(sc.seed) {
  n_ = sc_.agent_count();
  payload_ = sc_.payload_enabled;
  n_sub_ = exact_ratio(sc_.dt_ctrl, sc_.dt_sim, "sim.control_dt / sim.dt");

  if (sc_.noise.payload_force_scale > 0.0)
    chol_payload_force_ = cholesky_factor3(sc_.noise.payload_force_cov);
  if (sc_.noise.position_scale > 0.0)
    chol_position_ = cholesky_factor3(sc_.noise.position_cov);
  if (sc_.noise.measurement_scale > 0.0)
    chol_measurement_ = cholesky_factor12(sc_.weights.measurement_cov);

  flat_.assign(static_cast<size_t>(12 * n_) + (payload_ ? 6 : 0), 0.0);
  k1_ = k2_ = k3_ = k4_ = stage_ = flat_;
  agents_.resize(static_cast<size_t>(n_));
  position_noise_.assign(static_cast<size_t>(n_), Vec3::Zero());
  allocated_tension_.assign(static_cast<size_t>(n_), 0.0);
}

Vec3 Engine::agent_position(const std::vector<double>& y, int i) const {
  const double* s = y.data() + 12 * i;
  return Vec3(s[sx::x], s[sx::y], s[sx::z]);
}

Vec3 Engine::payload_position_of(const std::vector<double>& y) const {
  const double* p = y.data() + 12 * n_;
  return Vec3(p[0], p[1], p[2]);
}

Vec3 Engine::payload_velocity_of(const std::vector<double>& y) const {
  const double* p = y.data() + 12 * n_;
  return Vec3(p[3], p[4], p[5]);
}

void Engine::initialize() {
  for (int i = 0; i < n_; ++i) {
    AgentCtl& a = agents_[static_cast<size_t>(i)];
    for (int k = 0; k < 3; ++k) {
      if (sc_.leaders[static_cast<size_t>(k)] == i) {
        a.leader = true;
        a.leader_slot = k;
      }
    }
    if (sc_.mode == MissionMode::continuum && !a.leader) {
      a.weights = guidance::compute_weights(
          sc_.agents[static_cast<size_t>(i)].initial_position,
          sc_.schedule.triangle_at_sample(0));
    }
    double* s = agent_state(i);
    const Vec3& p0 = sc_.agents[static_cast<size_t>(i)].initial_position;
    s[sx::x] = p0.x();
    s[sx::y] = p0.y();
    s[sx::z] = p0.z();
  }
  if (payload_) {
    double* p = flat_.data() + 12 * n_;
    for (int i = 0; i < 3; ++i) {
      p[i] = sc_.payload_position(i);
      p[3 + i] = sc_.payload_velocity(i);
    }
  }
}

void Engine::sample_noise(std::uint64_t tick) {
  if (sc_.noise.payload_force_scale > 0.0) {
    payload_disturbance_ =
        sc_.noise.payload_force_scale *
        noise_.gaussian3(tick, 0, NoiseChannel::payload_force,
                         chol_payload_force_);
  }
  if (sc_.noise.position_scale > 0.0) {
    for (int i = 0; i < n_; ++i)
      position_noise_[static_cast<size_t>(i)] =
          sc_.noise.position_scale *
          noise_.gaussian3(tick, static_cast<std::uint64_t>(i),
                           NoiseChannel::cable_position, chol_position_);
  }
  for (int i = 0; i < n_; ++i) {
    AgentCtl& a = agents_[static_cast<size_t>(i)];
    a.measured_dev.setZero();
    if (sc_.noise.measurement_scale > 0.0)
      a.measured_dev = sc_.noise.measurement_scale *
                       noise_.gaussian12(tick, static_cast<std::uint64_t>(i),
                                         NoiseChannel::measurement,
                                         chol_measurement_);
  }
}

guidance::PosVel Engine::desired_pos_vel(int i, double t) const {
  guidance::PosVel pv;
  if (sc_.mode == MissionMode::hold) {
    pv.position = sc_.agents[static_cast<size_t>(i)].initial_position;
    return pv;
  }
  const AgentCtl& a = agents_[static_cast<size_t>(i)];
  if (a.leader) return guidance::leader_state(sc_.schedule, a.leader_slot, t);
  return guidance::follower_state(a.weights, sc_.schedule, t);
}

Vec3 Engine::plant_quad_position(const std::vector<double>& y, int i,
                                 double t) const {
  Vec3 base;
  if (sc_.cable_position_source == CablePositionSource::actual)
    base = agent_position(y, i);
  else
    base = desired_pos_vel(i, t).position;
  if (sc_.noise.position_target == PositionNoiseTarget::plant)
    base += position_noise_[static_cast<size_t>(i)];
  return base;
}

Vec3 Engine::allocator_quad_position(int i, double t) const {
  Vec3 base = plant_quad_position(flat_, i, t);
  if (sc_.noise.position_target == PositionNoiseTarget::allocator)
    base += position_noise_[static_cast<size_t>(i)];
  return base;
}

Vec3 Engine::spring_force_on_quad(const std::vector<double>& y, int i,
                                  double t) const {
  const Vec3 on_payload = payload::cable_force(
      plant_quad_position(y, i, t), payload_position_of(y),
      sc_.cables[static_cast<size_t>(i)], sc_.allow_compression);
  return -on_payload;
}

Vec12 Engine::desired_state_at(const AgentCtl& a, int i, double t) const {
  Vec12 s = a.active.state;
  const guidance::PosVel pv = desired_pos_vel(i, t);
  s(sx::x) = pv.position.x();
  s(sx::y) = pv.position.y();
  s(sx::z) = pv.position.z();
  return s;
}

void Engine::refresh_assemblies(double t, double chain_dt, bool first,
                                bool design, bool rebase) {
  std::vector<Vec3> alloc_ff;
  if (payload_ && sc_.control.ff_source == FeedforwardSource::allocated) {
    alloc_ff.resize(static_cast<size_t>(n_));
    const Vec3 ppos = payload_position_of(flat_);
    std::vector<Vec3> apos(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i)
      apos[static_cast<size_t>(i)] = allocator_quad_position(i, t);
    const std::vector<Vec3> dirs = tension::cable_directions(apos, ppos);
    for (int i = 0; i < n_; ++i)
      alloc_ff[static_cast<size_t>(i)] =
          -allocated_tension_[static_cast<size_t>(i)] *
          dirs[static_cast<size_t>(i)];
  }

  for (int i = 0; i < n_; ++i) {
    AgentCtl& a = agents_[static_cast<size_t>(i)];
    const guidance::PosVel pv = desired_pos_vel(i, t);
    Vec3 ff = Vec3::Zero();
    if (payload_) {
      if (sc_.control.ff_source == FeedforwardSource::allocated)
        ff = alloc_ff[static_cast<size_t>(i)];
      else
        ff = spring_force_on_quad(flat_, i, t);
    }
    const std::string ctx = agent_ctx(i, t);
    const desired::Assembly next = with_context(ctx, [&] {
      return desired::assemble(pv.position, pv.velocity, Vec3::Zero(), ff,
                               sc_.quad, 0.0, a.active, chain_dt,
                               first || !a.has_active);
    });
    if (a.has_active && rebase) {
      // A boundary recomputation moves the reference at fixed time (new
      // allocation, chain restart), so shift the deviation estimate to keep
      // the absolute estimate continuous across the jump.  Mid-interval
      // tick-rate refreshes are the reference's own time evolution, which
      // the deviation dynamics already model; shifting there would inject a
      // phantom deviation proportional to the reference rate.
      const Vec12 old_at_t = desired_state_at(a, i, t);
      a.dxhat += old_at_t - next.state;
    }
    a.active = next;
    a.has_active = true;
    if (design) {
      a.model = with_context(ctx, [&] {
        return lqg::linearize(a.active.state, a.active.input, ff, sc_.quad);
      });
      a.gains = with_context(ctx, [&] {
        return lqg::design_gains(a.model, sc_.weights);
      });
      a.has_gains = true;
    }
  }
}

void Engine::boundary_update(double t, int k) {
  // The allocator feeds the feedforward only in allocated mode; spring
  // runs take the cord forces directly and skip it (its near-orthogonal
  // guard would otherwise abort runs that never consume the result).
  if (payload_ && sc_.control.ff_source == FeedforwardSource::allocated) {
    const Vec3 ppos = payload_position_of(flat_);
    const Vec3 pvel = payload_velocity_of(flat_);
    std::vector<Vec3> apos(static_cast<size_t>(n_));
    std::vector<Vec3> forces(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      apos[static_cast<size_t>(i)] = allocator_quad_position(i, t);
      forces[static_cast<size_t>(i)] = payload::cable_force(
          apos[static_cast<size_t>(i)], ppos,
          sc_.cables[static_cast<size_t>(i)], sc_.allow_compression);
    }
    const Vec3 a_p = payload::payload_acceleration(
        pvel, forces, payload_disturbance_, sc_.payload_params);
    Vec3 load_dir;
    double load_mag = 0.0;
    const std::string ctx = "allocation at t = " + std::to_string(t) + ": ";
    with_context(ctx, [&] {
      tension::load_requirement(a_p, sc_.payload_params.mass,
                                sc_.payload_params.gravity, &load_dir,
                                &load_mag);
      const std::vector<Vec3> dirs = tension::cable_directions(apos, ppos);
      const tension::Allocation alloc =
          tension::allocate(dirs, load_dir, load_mag);
      allocated_tension_ = alloc.tensions;
      residual_last_ = alloc.off_axis_residual(dirs).norm();
      return 0;
    });
  }

  const bool design = !sc_.control.single_linearization;
  const double chain_dt =
      sc_.control.ff_rate == FeedforwardRate::tick ? sc_.dt_ctrl
                                                   : sc_.interval_dt;
  // A tick-rate chain must restart here: the feedforward may jump with the
  // fresh allocation, and differencing attitude across that jump at tick
  // resolution would manufacture enormous desired rates.
  const bool restart =
      k == 0 || sc_.control.ff_rate == FeedforwardRate::tick;
  refresh_assemblies(t, chain_dt, restart, design, true);

  if (sc_.control.single_linearization && k == 0) design_single_linearization();

  if (k == 0 && sc_.start_on_trajectory) {
    for (int i = 0; i < n_; ++i) {
      double* s = agent_state(i);
      const Vec12& d = agents_[static_cast<size_t>(i)].active.state;
      for (int j = 0; j < 12; ++j) s[j] = d(j);
    }
  }
}

void Engine::design_single_linearization() {
  // Whole-mission design: walk the desired chain (allocator fed with steady
  // load, payload translating with the fleet centroid) to the design time,
  // then freeze each agent's model and gains.
  const double lin_t = sc_.control.linearization_time;
  const int steps =
      static_cast<int>(std::lround(lin_t / sc_.interval_dt));
  std::vector<desired::Assembly> chain(static_cast<size_t>(n_));

  Vec3 centroid0 = Vec3::Zero();
  for (int i = 0; i < n_; ++i)
    centroid0 += desired_pos_vel(i, 0.0).position;
  centroid0 /= static_cast<double>(n_);

  for (int k = 0; k <= steps; ++k) {
    const double t = k * sc_.interval_dt;
    Vec3 centroid = Vec3::Zero();
    for (int i = 0; i < n_; ++i)
      centroid += desired_pos_vel(i, t).position;
    centroid /= static_cast<double>(n_);
    const Vec3 ppos_d = sc_.payload_position + (centroid - centroid0);

    std::vector<Vec3> ff(static_cast<size_t>(n_), Vec3::Zero());
    if (payload_) {
      std::vector<Vec3> apos(static_cast<size_t>(n_));
      for (int i = 0; i < n_; ++i)
        apos[static_cast<size_t>(i)] = desired_pos_vel(i, t).position;
      const std::vector<Vec3> dirs = tension::cable_directions(apos, ppos_d);
      if (sc_.control.ff_source == FeedforwardSource::allocated) {
        Vec3 load_dir;
        double load_mag = 0.0;
        tension::load_requirement(Vec3::Zero(), sc_.payload_params.mass,
                                  sc_.payload_params.gravity, &load_dir,
                                  &load_mag);
        const tension::Allocation alloc =
            tension::allocate(dirs, load_dir, load_mag);
        for (int i = 0; i < n_; ++i)
          ff[static_cast<size_t>(i)] =
              -alloc.tensions[static_cast<size_t>(i)] *
              dirs[static_cast<size_t>(i)];
      } else {
        for (int i = 0; i < n_; ++i)
          ff[static_cast<size_t>(i)] = -payload::cable_force(
              apos[static_cast<size_t>(i)], ppos_d,
              sc_.cables[static_cast<size_t>(i)], sc_.allow_compression);
      }
    }
    for (int i = 0; i < n_; ++i) {
      const guidance::PosVel pv = desired_pos_vel(i, t);
      const std::string ctx = agent_ctx(i, t) + "(design preview) ";
      chain[static_cast<size_t>(i)] = with_context(ctx, [&] {
        return desired::assemble(pv.position, pv.velocity, Vec3::Zero(),
                                 ff[static_cast<size_t>(i)], sc_.quad, 0.0,
                                 chain[static_cast<size_t>(i)],
                                 sc_.interval_dt, k == 0);
      });
      if (k == steps) {
        AgentCtl& a = agents_[static_cast<size_t>(i)];
        a.model = with_context(ctx, [&] {
          return lqg::linearize(chain[static_cast<size_t>(i)].state,
                                chain[static_cast<size_t>(i)].input,
                                ff[static_cast<size_t>(i)], sc_.quad);
        });
        a.gains = with_context(ctx, [&] {
          return lqg::design_gains(a.model, sc_.weights);
        });
        a.has_gains = true;
      }
    }
  }
}

void Engine::derivative(double t, const std::vector<double>& y,
                        std::vector<double>& dy) const {
  Vec3 ppos, pvel;
  std::vector<Vec3> payload_forces;
  if (payload_) {
    ppos = payload_position_of(y);
    pvel = payload_velocity_of(y);
    payload_forces.resize(static_cast<size_t>(n_));
  }
  for (int i = 0; i < n_; ++i) {
    const Eigen::Map<const Vec12> s(y.data() + 12 * i);
    Vec3 on_quad = Vec3::Zero();
    if (payload_) {
      const Vec3 on_payload = payload::cable_force(
          plant_quad_position(y, i, t), ppos,
          sc_.cables[static_cast<size_t>(i)], sc_.allow_compression);
      payload_forces[static_cast<size_t>(i)] = on_payload;
      on_quad = -on_payload;
    }
    const AgentCtl& a = agents_[static_cast<size_t>(i)];
    const Vec12 ds = with_context(
        agent_ctx(i, t) + "state " + state_snapshot(s) + ": ", [&] {
          return dynamics::state_derivative(
              s, dynamics::ControlInput::from_vec(a.input), on_quad, sc_.quad);
        });
    Eigen::Map<Vec12>(dy.data() + 12 * i) = ds;
  }
  if (payload_) {
    const Vec3 acc = payload::payload_acceleration(
        pvel, payload_forces, payload_disturbance_, sc_.payload_params);
    double* out = dy.data() + 12 * n_;
    out[0] = pvel.x();
    out[1] = pvel.y();
    out[2] = pvel.z();
    out[3] = acc.x();
    out[4] = acc.y();
    out[5] = acc.z();
  }
}

void Engine::advance_plant(double t) {
  const size_t m = flat_.size();
  const double h = sc_.dt_sim;
  for (int j = 0; j < n_sub_; ++j) {
    const double t0 = t + j * h;
    derivative(t0, flat_, k1_);
    kernels::stage(stage_.data(), flat_.data(), k1_.data(), 0.5 * h, m);
    derivative(t0 + 0.5 * h, stage_, k2_);
    kernels::stage(stage_.data(), flat_.data(), k2_.data(), 0.5 * h, m);
    derivative(t0 + 0.5 * h, stage_, k3_);
    kernels::stage(stage_.data(), flat_.data(), k3_.data(), h, m);
    derivative(t0 + h, stage_, k4_);
    kernels::rk4_combine(flat_.data(), k1_.data(), k2_.data(), k3_.data(),
                         k4_.data(), h / 6.0, m);
  }
}

void Engine::record(double t, Trace& trace) const {
  TraceTick tick;
  tick.t = t;
  tick.agents.resize(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    const AgentCtl& a = agents_[static_cast<size_t>(i)];
    AgentSample& out = tick.agents[static_cast<size_t>(i)];
    out.actual = Eigen::Map<const Vec12>(flat_.data() + 12 * i);
    out.desired = a.desired_now;
    out.estimated = a.desired_now + a.dxhat;
    out.input = a.input;
    out.cable_tension =
        payload_ ? spring_force_on_quad(flat_, i, t).norm() : 0.0;
  }
  if (payload_) {
    tick.payload.position = payload_position_of(flat_);
    tick.payload.velocity = payload_velocity_of(flat_);
    tick.payload.allocation_residual = residual_last_;
  }
  trace.ticks.push_back(std::move(tick));
}

Trace Engine::run() {
  initialize();
  Trace trace;
  trace.n_agents = n_;
  trace.has_payload = payload_;

  const int ticks = exact_ratio(sc_.t_final, sc_.dt_ctrl, "t_final / control_dt");
  const int interval_ticks =
      exact_ratio(sc_.interval_dt, sc_.dt_ctrl, "interval / control_dt");
  const int trace_every =
      exact_ratio(sc_.trace_dt, sc_.dt_ctrl, "trace_dt / control_dt");
  trace.ticks.reserve(static_cast<size_t>(ticks / trace_every) + 2);

  for (int tick = 0; tick <= ticks; ++tick) {
    const double t = tick * sc_.dt_ctrl;
    const bool final_tick = tick == ticks;
    sample_noise(static_cast<std::uint64_t>(tick));

    if (!final_tick && tick % interval_ticks == 0)
      boundary_update(t, tick / interval_ticks);
    else if (sc_.control.ff_rate == FeedforwardRate::tick)
      refresh_assemblies(t, sc_.dt_ctrl, false, false, false);

    for (int i = 0; i < n_; ++i) {
      AgentCtl& a = agents_[static_cast<size_t>(i)];
      a.desired_now = desired_state_at(a, i, t);
      const Eigen::Map<const Vec12> actual(flat_.data() + 12 * i);
      // measured_dev currently holds the sampled measurement noise
      a.measured_dev += actual - a.desired_now;
      Vec4 du = Vec4::Zero();
      if (sc_.control.feedback && a.has_gains) du = a.gains.K * a.dxhat;
      Vec4 u = a.active.input + du;
      if (u(0) < 0.0) u(0) = 0.0;
      a.input = u;
    }

    if (tick % trace_every == 0 || final_tick) record(t, trace);
    if (final_tick) break;

    for (int i = 0; i < n_; ++i) {
      AgentCtl& a = agents_[static_cast<size_t>(i)];
      const Vec4 du_applied = a.input - a.active.input;
      a.dxhat = lqg::estimator_step(a.model, a.gains.L, a.dxhat, du_applied,
                                    a.measured_dev, sc_.dt_ctrl,
                                    sc_.control.literal_innovation);
    }
    advance_plant(t);
  }
  return trace;
}

Trace run_scenario(const ScenarioConfig& sc) {
  Engine engine(sc);
  return engine.run();
}

}  // namespace swarmlift::sim
