#include "swarmlift/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace swarmlift::sim {

namespace {

using config::KeyValueConfig;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt3(const Vec3& v) {
  return fmt(v.x()) + ", " + fmt(v.y()) + ", " + fmt(v.z());
}

bool near_multiple(double a, double b) {
  if (b <= 0.0) return false;
  const double r = a / b;
  return std::abs(r - std::round(r)) <= 1e-9 * std::max(1.0, std::abs(r));
}

template <typename M>
M read_matrix(KeyValueConfig& cfg, const std::string& prefix, const M& dflt) {
  M base = dflt;
  const int n = static_cast<int>(dflt.rows());
  if (cfg.has(prefix + ".row1")) {
    for (int r = 0; r < n; ++r) {
      const std::string key = prefix + ".row" + std::to_string(r + 1);
      const std::vector<double> vals = cfg.get_doubles(key);
      if (static_cast<int>(vals.size()) != n)
        throw ConfigError("key '" + key + "': expected " + std::to_string(n) +
                          " values, got " + std::to_string(vals.size()));
      for (int c = 0; c < n; ++c) base(r, c) = vals[static_cast<size_t>(c)];
    }
  }
  const double scale = cfg.get_double(prefix + "_scale", 1.0);
  return scale * base;
}

template <typename M>
void emit_matrix(std::ostringstream& os, const std::string& prefix,
                 const M& value, const M& dflt) {
  if (value.isApprox(dflt, 0.0) || value == dflt) return;
  const int n = static_cast<int>(value.rows());
  for (int r = 0; r < n; ++r) {
    os << prefix << ".row" << (r + 1) << " = ";
    for (int c = 0; c < n; ++c) {
      if (c > 0) os << ", ";
      os << fmt(value(r, c));
    }
    os << "\n";
  }
}

template <typename M>
bool symmetric_psd(const M& m, double* min_eig) {
  const double scale = std::max(1.0, m.norm());
  if ((m - m.transpose()).norm() > 1e-9 * scale) return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      Eigen::MatrixXd(m), Eigen::EigenvaluesOnly);
  *min_eig = es.eigenvalues().minCoeff();
  return *min_eig >= -1e-9 * scale;
}

template <typename M>
bool positive_definite(const M& m) {
  if ((m - m.transpose()).norm() > 1e-9 * std::max(1.0, m.norm())) return false;
  const Eigen::LLT<Eigen::MatrixXd> llt{Eigen::MatrixXd(m)};
  return llt.info() == Eigen::Success;
}

}  // namespace

ScenarioConfig load_scenario(KeyValueConfig& cfg) {
  ScenarioConfig sc;

  sc.dt_sim = cfg.get_double("sim.dt", sc.dt_sim);
  sc.dt_ctrl = cfg.get_double("sim.control_dt", sc.dt_ctrl);
  sc.interval_dt = cfg.get_double("sim.interval", sc.interval_dt);
  sc.trace_dt = cfg.get_double("sim.trace_dt", sc.trace_dt);
  sc.t_final = cfg.get_double("sim.t_final", sc.t_final);
  const int seed = cfg.get_int("sim.seed", 1);
  sc.seed = static_cast<std::uint64_t>(seed);

  const std::string mode = cfg.get_string("mission.mode", "continuum");
  if (mode == "continuum") {
    sc.mode = MissionMode::continuum;
  } else if (mode == "hold") {
    sc.mode = MissionMode::hold;
  } else {
    throw ConfigError("mission.mode: expected 'continuum' or 'hold', got '" +
                      mode + "'");
  }
  sc.start_on_trajectory =
      cfg.get_bool("mission.start_on_trajectory", sc.start_on_trajectory);

  sc.quad.mass = cfg.get_double("quad.mass", sc.quad.mass);
  sc.quad.ixx = cfg.get_double("quad.ixx", sc.quad.ixx);
  sc.quad.iyy = cfg.get_double("quad.iyy", sc.quad.iyy);
  sc.quad.izz = cfg.get_double("quad.izz", sc.quad.izz);
  const Vec3 qdrag = cfg.get_vec3("quad.drag",
                                  Vec3(sc.quad.ax, sc.quad.ay, sc.quad.az));
  sc.quad.ax = qdrag.x();
  sc.quad.ay = qdrag.y();
  sc.quad.az = qdrag.z();
  sc.quad.gravity = cfg.get_double("quad.gravity", sc.quad.gravity);

  const int count = cfg.get_int("agent.count");
  if (count < 1 || count > 10000)
    throw ConfigError("agent.count: expected a value in [1, 10000]");
  sc.agents.resize(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    const std::string key = "agent." + std::to_string(i + 1) + ".position";
    sc.agents[static_cast<size_t>(i)].initial_position = cfg.get_vec3(key);
  }

  if (cfg.has("mission.leaders")) {
    const std::vector<double> ids = cfg.get_doubles("mission.leaders");
    if (ids.size() != 3)
      throw ConfigError("mission.leaders: expected 3 agent ids");
    for (int k = 0; k < 3; ++k)
      sc.leaders[static_cast<size_t>(k)] = static_cast<int>(ids[static_cast<size_t>(k)]) - 1;
  }

  if (sc.mode == MissionMode::continuum) {
    const int wp = cfg.get_int("waypoints.count");
    if (wp < 2) throw ConfigError("waypoints.count: need at least 2 samples");
    sc.schedule.times.resize(static_cast<size_t>(wp));
    for (auto& lead : sc.schedule.leaders)
      lead.resize(static_cast<size_t>(wp));
    for (int i = 0; i < wp; ++i) {
      const std::string p = "waypoints." + std::to_string(i + 1);
      sc.schedule.times[static_cast<size_t>(i)] = cfg.get_double(p + ".time");
      for (int k = 0; k < 3; ++k)
        sc.schedule.leaders[static_cast<size_t>(k)][static_cast<size_t>(i)] =
            cfg.get_vec3(p + ".leader" + std::to_string(k + 1));
    }
  }

  sc.payload_enabled = cfg.get_bool("payload.enabled", false);
  if (sc.payload_enabled) {
    sc.payload_params.mass = cfg.get_double("payload.mass", 10.0);
    sc.payload_params.drag = cfg.get_vec3("payload.drag", Vec3(4.0, 4.0, 4.0));
    sc.payload_params.gravity = sc.quad.gravity;
    sc.payload_position = cfg.get_vec3("payload.position");
    sc.payload_velocity = cfg.get_vec3("payload.velocity", Vec3::Zero());
    sc.cables.resize(sc.agents.size());
    for (size_t i = 0; i < sc.agents.size(); ++i) {
      const std::string p = "cable." + std::to_string(i + 1);
      payload::CableSpec& c = sc.cables[i];
      c.agent = static_cast<int>(i);
      c.stiffness = cfg.has(p + ".stiffness")
                        ? cfg.get_double(p + ".stiffness")
                        : cfg.get_double("cable.stiffness");
      c.free_length = cfg.has(p + ".free_length")
                          ? cfg.get_double(p + ".free_length")
                          : cfg.get_double("cable.free_length");
    }
    sc.allow_compression =
        cfg.get_bool("cables.allow_compression", sc.allow_compression);
    const std::string src = cfg.get_string("cables.position_source", "actual");
    if (src == "actual") {
      sc.cable_position_source = CablePositionSource::actual;
    } else if (src == "desired") {
      sc.cable_position_source = CablePositionSource::desired;
    } else {
      throw ConfigError(
          "cables.position_source: expected 'actual' or 'desired', got '" +
          src + "'");
    }
  }

  sc.control.feedback = cfg.get_bool("control.feedback", true);
  const std::string ff = cfg.get_string("control.feedforward", "spring");
  if (ff == "allocated") {
    sc.control.ff_source = FeedforwardSource::allocated;
  } else if (ff == "spring") {
    sc.control.ff_source = FeedforwardSource::spring;
  } else {
    throw ConfigError(
        "control.feedforward: expected 'allocated' or 'spring', got '" + ff +
        "'");
  }
  const std::string ffr = cfg.get_string("control.feedforward_rate", "tick");
  if (ffr == "interval") {
    sc.control.ff_rate = FeedforwardRate::interval;
  } else if (ffr == "tick") {
    sc.control.ff_rate = FeedforwardRate::tick;
  } else {
    throw ConfigError(
        "control.feedforward_rate: expected 'interval' or 'tick', got '" + ffr +
        "'");
  }
  sc.control.single_linearization =
      cfg.get_bool("control.single_linearization", false);
  sc.control.linearization_time =
      cfg.get_double("control.linearization_time", 10.0);
  sc.control.literal_innovation =
      cfg.get_bool("lqg.literal_innovation", false);

  sc.weights.state_cost =
      read_matrix(cfg, "lqg.state_cost", lqg::default_state_matrix());
  sc.weights.input_cost =
      read_matrix(cfg, "lqg.input_cost", lqg::default_input_cost());
  sc.weights.process_cov =
      read_matrix(cfg, "lqg.process_cov", lqg::default_state_matrix());
  sc.weights.measurement_cov =
      read_matrix(cfg, "lqg.measurement_cov", lqg::default_state_matrix());

  sc.noise.payload_force_scale =
      cfg.get_double("noise.payload_force_scale", 0.0);
  sc.noise.position_scale = cfg.get_double("noise.position_scale", 0.0);
  sc.noise.measurement_scale = cfg.get_double("noise.measurement_scale", 0.0);
  sc.noise.payload_force_cov =
      read_matrix(cfg, "noise.payload_force_cov", lqg::default_vector_cov());
  sc.noise.position_cov =
      read_matrix(cfg, "noise.position_cov", lqg::default_vector_cov());
  const std::string tgt = cfg.get_string("noise.position_target", "allocator");
  if (tgt == "allocator") {
    sc.noise.position_target = PositionNoiseTarget::allocator;
  } else if (tgt == "plant") {
    sc.noise.position_target = PositionNoiseTarget::plant;
  } else {
    throw ConfigError(
        "noise.position_target: expected 'allocator' or 'plant', got '" + tgt +
        "'");
  }
  sc.payload_params.disturbance_cov = sc.noise.payload_force_cov;

  return sc;
}

std::vector<ValidationIssue> validate_scenario(const ScenarioConfig& sc) {
  std::vector<ValidationIssue> issues;
  const auto add = [&](const std::string& path, const std::string& msg) {
    issues.push_back(ValidationIssue{path, msg});
  };

  if (!(sc.dt_sim > 0.0)) add("sim.dt", "must be positive");
  if (!(sc.dt_ctrl > 0.0)) add("sim.control_dt", "must be positive");
  if (sc.dt_sim > 0.0 && sc.dt_ctrl > 0.0 &&
      !near_multiple(sc.dt_ctrl, sc.dt_sim))
    add("sim.control_dt", "must be an integer multiple of sim.dt");
  if (!(sc.interval_dt > 0.0)) add("sim.interval", "must be positive");
  if (sc.interval_dt > 0.0 && sc.dt_ctrl > 0.0 &&
      !near_multiple(sc.interval_dt, sc.dt_ctrl))
    add("sim.interval", "must be an integer multiple of sim.control_dt");
  if (!(sc.trace_dt > 0.0)) add("sim.trace_dt", "must be positive");
  if (sc.trace_dt > 0.0 && sc.dt_ctrl > 0.0 &&
      !near_multiple(sc.trace_dt, sc.dt_ctrl))
    add("sim.trace_dt", "must be an integer multiple of sim.control_dt");
  if (!(sc.t_final > 0.0)) add("sim.t_final", "must be positive");
  if (sc.t_final > 0.0 && sc.dt_ctrl > 0.0 &&
      !near_multiple(sc.t_final, sc.dt_ctrl))
    add("sim.t_final", "must be an integer multiple of sim.control_dt");

  if (!(sc.quad.mass > 0.0)) add("quad.mass", "must be positive");
  if (!(sc.quad.ixx > 0.0 && sc.quad.iyy > 0.0 && sc.quad.izz > 0.0))
    add("quad.ixx/iyy/izz", "inertias must be positive");
  if (sc.quad.ax < 0.0 || sc.quad.ay < 0.0 || sc.quad.az < 0.0)
    add("quad.drag", "coefficients must be nonnegative");
  if (!(sc.quad.gravity > 0.0)) add("quad.gravity", "must be positive");

  for (size_t i = 0; i < sc.agents.size(); ++i) {
    if (!sc.agents[i].initial_position.allFinite())
      add("agent." + std::to_string(i + 1) + ".position", "must be finite");
  }

  if (sc.mode == MissionMode::continuum) {
    if (sc.agent_count() < 4)
      add("agent.count",
          "continuum mode needs at least 4 agents (3 leaders + 1 follower)");
    const int n = sc.agent_count();
    for (int k = 0; k < 3; ++k) {
      const int id = sc.leaders[static_cast<size_t>(k)];
      if (id < 0 || id >= n)
        add("mission.leaders", "leader id " + std::to_string(id + 1) +
                                   " out of range 1.." + std::to_string(n));
    }
    if (sc.leaders[0] == sc.leaders[1] || sc.leaders[0] == sc.leaders[2] ||
        sc.leaders[1] == sc.leaders[2])
      add("mission.leaders", "leader ids must be distinct");

    if (sc.schedule.samples() < 2) {
      add("waypoints", "need at least 2 samples");
    } else {
      for (size_t i = 1; i < sc.schedule.samples(); ++i)
        if (!(sc.schedule.times[i] > sc.schedule.times[i - 1]))
          add("waypoints." + std::to_string(i + 1) + ".time",
              "times must be strictly increasing");
      if (sc.schedule.t_begin() > 0.0)
        add("waypoints.1.time", "schedule must start at or before t = 0");
      if (sc.schedule.t_end() < sc.t_final)
        add("waypoints", "schedule ends before sim.t_final");
      for (size_t i = 0; i < sc.schedule.samples(); ++i) {
        if (!guidance::leading_triangle_ok(sc.schedule.triangle_at_sample(i)))
          add("waypoints." + std::to_string(i + 1),
              "leading triangle is rank deficient at this sample");
      }

      bool leaders_ok = true;
      for (int k = 0; k < 3; ++k) {
        const int id = sc.leaders[static_cast<size_t>(k)];
        if (id < 0 || id >= n) {
          leaders_ok = false;
          continue;
        }
        const Vec3 diff = sc.schedule.leaders[static_cast<size_t>(k)].front() -
                          sc.agents[static_cast<size_t>(id)].initial_position;
        if (diff.norm() > 1e-9) {
          leaders_ok = false;
          add("waypoints.1.leader" + std::to_string(k + 1),
              "first sample differs from agent " + std::to_string(id + 1) +
                  "'s initial position");
        }
      }

      if (leaders_ok &&
          guidance::leading_triangle_ok(sc.schedule.triangle_at_sample(0))) {
        const guidance::LeadingTriangle tri0 = sc.schedule.triangle_at_sample(0);
        for (int i = 0; i < n; ++i) {
          if (sc.is_leader(i)) continue;
          const guidance::BarycentricWeights w = guidance::compute_weights(
              sc.agents[static_cast<size_t>(i)].initial_position, tri0);
          // Tolerance admits boundary agents whose published coordinates
          // are rounded to four decimals.
          if (w.min() < -1e-3)
            add("agent." + std::to_string(i + 1) + ".position",
                "outside the initial leading triangle (min weight " +
                    std::to_string(w.min()) + ")");
        }
      }
    }
  }

  if (sc.payload_enabled) {
    if (!(sc.payload_params.mass > 0.0)) add("payload.mass", "must be positive");
    if (sc.payload_params.drag.minCoeff() < 0.0)
      add("payload.drag", "coefficients must be nonnegative");
    if (!sc.payload_position.allFinite())
      add("payload.position", "must be finite");
    if (!sc.payload_velocity.allFinite())
      add("payload.velocity", "must be finite");
    if (sc.cables.size() != sc.agents.size())
      add("cable", "need exactly one cable per agent");
    for (size_t i = 0; i < sc.cables.size(); ++i) {
      const std::string p = "cable." + std::to_string(i + 1);
      if (!(sc.cables[i].stiffness > 0.0)) add(p + ".stiffness", "must be positive");
      if (!(sc.cables[i].free_length > 0.0))
        add(p + ".free_length", "must be positive");
    }
  }

  if (!positive_definite(sc.weights.input_cost))
    add("lqg.input_cost", "must be symmetric positive definite");
  if (!positive_definite(sc.weights.measurement_cov))
    add("lqg.measurement_cov", "must be symmetric positive definite");
  double min_eig = 0.0;
  if (!symmetric_psd(sc.weights.state_cost, &min_eig))
    add("lqg.state_cost", "must be symmetric positive semidefinite");
  if (!symmetric_psd(sc.weights.process_cov, &min_eig))
    add("lqg.process_cov", "must be symmetric positive semidefinite");

  if (sc.noise.payload_force_scale < 0.0)
    add("noise.payload_force_scale", "must be nonnegative");
  if (sc.noise.position_scale < 0.0)
    add("noise.position_scale", "must be nonnegative");
  if (sc.noise.measurement_scale < 0.0)
    add("noise.measurement_scale", "must be nonnegative");
  if (sc.noise.payload_force_scale > 0.0 &&
      !positive_definite(sc.noise.payload_force_cov))
    add("noise.payload_force_cov", "must be symmetric positive definite");
  if (sc.noise.position_scale > 0.0 &&
      !positive_definite(sc.noise.position_cov))
    add("noise.position_cov", "must be symmetric positive definite");
  if (sc.noise.measurement_scale > 0.0 &&
      !positive_definite(sc.weights.measurement_cov))
    add("lqg.measurement_cov", "sampling needs a positive definite matrix");

  if (sc.control.single_linearization) {
    if (sc.control.linearization_time < 0.0 ||
        sc.control.linearization_time > sc.t_final)
      add("control.linearization_time", "must lie within [0, sim.t_final]");
    else if (!near_multiple(sc.control.linearization_time, sc.interval_dt))
      add("control.linearization_time",
          "must be an integer multiple of sim.interval");
  }

  return issues;
}

std::vector<ValidationIssue> unknown_key_issues(
    const config::KeyValueConfig& cfg) {
  std::vector<ValidationIssue> issues;
  for (const std::string& k : cfg.unconsumed())
    issues.push_back(ValidationIssue{k, "unknown key"});
  return issues;
}

ScenarioConfig make_canonical_scenario() {
  ScenarioConfig sc;
  // The regulator weights place closed-loop rate poles near -2100 rad/s
  // (torque cost 0.01 against ~5e-3 inertias), so a zero-order-hold loop
  // is only stable below h = 2/2100 s.  The tick runs at 2.5e-4 s for
  // damping margin; the trace keeps the 0.01 s analysis grid.
  sc.dt_sim = 2.5e-4;
  sc.dt_ctrl = 2.5e-4;
  sc.interval_dt = 1.0;
  sc.trace_dt = 0.01;
  sc.t_final = 20.0;
  sc.seed = 1;
  sc.mode = MissionMode::continuum;
  sc.start_on_trajectory = true;

  sc.quad = dynamics::QuadParams{};  // defaults carry the reference values

  static const double table[20][2] = {
      {-20.0, -20.0},     {0.0, 20.0},        {20.0, -18.0},
      {18.5553, -16.4474}, {2.9446, 14.0859}, {18.7505, -15.5800},
      {15.8793, -11.5596}, {14.2071, -7.9219}, {8.1559, 3.7254},
      {9.0793, 2.5421},    {16.1245, -10.9749}, {14.7419, -8.5407},
      {15.3257, -9.5906},  {13.8798, -7.1498}, {14.9875, -9.0965},
      {10.9917, -1.7927},  {10.4800, -0.2296}, {10.9509, -1.7695},
      {12.8728, -4.8958},  {14.5688, -7.9380}};
  sc.agents.resize(20);
  for (int i = 0; i < 20; ++i)
    sc.agents[static_cast<size_t>(i)].initial_position =
        Vec3(table[i][0], table[i][1], 50.0);

  sc.leaders = {0, 1, 2};
  sc.schedule.times = {0.0, 20.0};
  sc.schedule.leaders[0] = {Vec3(-20.0, -20.0, 50.0), Vec3(-15.0, 0.0, 50.0)};
  sc.schedule.leaders[1] = {Vec3(0.0, 20.0, 50.0), Vec3(0.0, 35.0, 50.0)};
  sc.schedule.leaders[2] = {Vec3(20.0, -18.0, 50.0), Vec3(15.0, 10.0, 50.0)};

  sc.payload_enabled = true;
  sc.payload_params.mass = 10.0;
  sc.payload_params.drag = Vec3(4.0, 4.0, 4.0);
  sc.payload_params.gravity = sc.quad.gravity;

  Vec3 centroid = Vec3::Zero();
  for (const AgentSetup& a : sc.agents) centroid += a.initial_position;
  centroid /= static_cast<double>(sc.agents.size());
  const double k_cable = 100.0;
  const double stretch = 1.01;
  const double depth = payload::equilibrium_length(
      sc.payload_params.mass, sc.payload_params.gravity,
      sc.agent_count(), k_cable, stretch);
  sc.payload_position = Vec3(centroid.x(), centroid.y(), 50.0 - depth);

  // Cords pre-stretched by the ratio: the summed spring forces then balance
  // the payload weight exactly in the initial geometry.
  sc.cables.resize(sc.agents.size());
  for (size_t i = 0; i < sc.agents.size(); ++i) {
    const double len =
        (sc.agents[i].initial_position - sc.payload_position).norm();
    sc.cables[i] = payload::CableSpec{static_cast<int>(i), k_cable,
                                      len / stretch};
  }

  // The payload starts moving with the fleet's mean desired velocity.
  Vec3 mean_vel = Vec3::Zero();
  const guidance::LeadingTriangle tri0 = sc.schedule.triangle_at_sample(0);
  for (int i = 0; i < sc.agent_count(); ++i) {
    const guidance::BarycentricWeights w = guidance::compute_weights(
        sc.agents[static_cast<size_t>(i)].initial_position, tri0);
    mean_vel += guidance::follower_state(w, sc.schedule, 0.0).velocity;
  }
  sc.payload_velocity = mean_vel / static_cast<double>(sc.agent_count());

  sc.allow_compression = false;
  sc.cable_position_source = CablePositionSource::actual;

  sc.control.feedback = true;
  sc.control.ff_source = FeedforwardSource::spring;
  sc.control.ff_rate = FeedforwardRate::tick;
  sc.control.single_linearization = false;
  sc.control.linearization_time = 10.0;
  sc.control.literal_innovation = false;

  sc.weights.state_cost = lqg::default_state_matrix();
  sc.weights.input_cost = lqg::default_input_cost();
  sc.weights.process_cov = lqg::default_state_matrix();
  sc.weights.measurement_cov = lqg::default_state_matrix();

  sc.noise.payload_force_scale = 1.0;
  sc.noise.position_scale = 1.0;
  sc.noise.measurement_scale = 1.0;
  sc.noise.payload_force_cov = lqg::default_vector_cov();
  sc.noise.position_cov = lqg::default_vector_cov();
  sc.noise.position_target = PositionNoiseTarget::allocator;
  sc.payload_params.disturbance_cov = sc.noise.payload_force_cov;

  return sc;
}

std::string serialize_scenario(const ScenarioConfig& sc) {
  std::ostringstream os;
  os << "# swarmlift scenario\n";
  os << "sim.dt = " << fmt(sc.dt_sim) << "\n";
  os << "sim.control_dt = " << fmt(sc.dt_ctrl) << "\n";
  os << "sim.interval = " << fmt(sc.interval_dt) << "\n";
  os << "sim.trace_dt = " << fmt(sc.trace_dt) << "\n";
  os << "sim.t_final = " << fmt(sc.t_final) << "\n";
  os << "sim.seed = " << sc.seed << "\n";
  os << "\n";
  os << "mission.mode = "
     << (sc.mode == MissionMode::continuum ? "continuum" : "hold") << "\n";
  os << "mission.start_on_trajectory = "
     << (sc.start_on_trajectory ? "true" : "false") << "\n";
  if (sc.mode == MissionMode::continuum)
    os << "mission.leaders = " << (sc.leaders[0] + 1) << ", "
       << (sc.leaders[1] + 1) << ", " << (sc.leaders[2] + 1) << "\n";
  os << "\n";
  os << "quad.mass = " << fmt(sc.quad.mass) << "\n";
  os << "quad.ixx = " << fmt(sc.quad.ixx) << "\n";
  os << "quad.iyy = " << fmt(sc.quad.iyy) << "\n";
  os << "quad.izz = " << fmt(sc.quad.izz) << "\n";
  os << "quad.drag = " << fmt3(Vec3(sc.quad.ax, sc.quad.ay, sc.quad.az))
     << "\n";
  os << "quad.gravity = " << fmt(sc.quad.gravity) << "\n";
  os << "\n";
  os << "agent.count = " << sc.agent_count() << "\n";
  for (int i = 0; i < sc.agent_count(); ++i)
    os << "agent." << (i + 1) << ".position = "
       << fmt3(sc.agents[static_cast<size_t>(i)].initial_position) << "\n";
  os << "\n";
  if (sc.mode == MissionMode::continuum) {
    os << "waypoints.count = " << sc.schedule.samples() << "\n";
    for (size_t i = 0; i < sc.schedule.samples(); ++i) {
      os << "waypoints." << (i + 1) << ".time = " << fmt(sc.schedule.times[i])
         << "\n";
      for (int k = 0; k < 3; ++k)
        os << "waypoints." << (i + 1) << ".leader" << (k + 1) << " = "
           << fmt3(sc.schedule.leaders[static_cast<size_t>(k)][i]) << "\n";
    }
    os << "\n";
  }
  os << "payload.enabled = " << (sc.payload_enabled ? "true" : "false")
     << "\n";
  if (sc.payload_enabled) {
    os << "payload.mass = " << fmt(sc.payload_params.mass) << "\n";
    os << "payload.drag = " << fmt3(sc.payload_params.drag) << "\n";
    os << "payload.position = " << fmt3(sc.payload_position) << "\n";
    os << "payload.velocity = " << fmt3(sc.payload_velocity) << "\n";
    for (size_t i = 0; i < sc.cables.size(); ++i) {
      os << "cable." << (i + 1) << ".stiffness = "
         << fmt(sc.cables[i].stiffness) << "\n";
      os << "cable." << (i + 1) << ".free_length = "
         << fmt(sc.cables[i].free_length) << "\n";
    }
    os << "cables.allow_compression = "
       << (sc.allow_compression ? "true" : "false") << "\n";
    os << "cables.position_source = "
       << (sc.cable_position_source == CablePositionSource::actual ? "actual"
                                                                   : "desired")
       << "\n";
  }
  os << "\n";
  os << "control.feedback = " << (sc.control.feedback ? "true" : "false")
     << "\n";
  os << "control.feedforward = "
     << (sc.control.ff_source == FeedforwardSource::allocated ? "allocated"
                                                              : "spring")
     << "\n";
  os << "control.feedforward_rate = "
     << (sc.control.ff_rate == FeedforwardRate::interval ? "interval" : "tick")
     << "\n";
  os << "control.single_linearization = "
     << (sc.control.single_linearization ? "true" : "false") << "\n";
  os << "control.linearization_time = " << fmt(sc.control.linearization_time)
     << "\n";
  os << "lqg.literal_innovation = "
     << (sc.control.literal_innovation ? "true" : "false") << "\n";
  emit_matrix(os, "lqg.state_cost", sc.weights.state_cost,
              lqg::default_state_matrix());
  emit_matrix(os, "lqg.input_cost", sc.weights.input_cost,
              lqg::default_input_cost());
  emit_matrix(os, "lqg.process_cov", sc.weights.process_cov,
              lqg::default_state_matrix());
  emit_matrix(os, "lqg.measurement_cov", sc.weights.measurement_cov,
              lqg::default_state_matrix());
  os << "\n";
  os << "noise.payload_force_scale = " << fmt(sc.noise.payload_force_scale)
     << "\n";
  os << "noise.position_scale = " << fmt(sc.noise.position_scale) << "\n";
  os << "noise.measurement_scale = " << fmt(sc.noise.measurement_scale)
     << "\n";
  os << "noise.position_target = "
     << (sc.noise.position_target == PositionNoiseTarget::allocator
             ? "allocator"
             : "plant")
     << "\n";
  emit_matrix(os, "noise.payload_force_cov", sc.noise.payload_force_cov,
              lqg::default_vector_cov());
  emit_matrix(os, "noise.position_cov", sc.noise.position_cov,
              lqg::default_vector_cov());
  return os.str();
}

std::string describe_flags(const ScenarioConfig& sc) {
  std::ostringstream os;
  os << "mode="
     << (sc.mode == MissionMode::continuum ? "continuum" : "hold");
  os << " feedback=" << (sc.control.feedback ? "on" : "off");
  os << " feedforward="
     << (sc.control.ff_source == FeedforwardSource::allocated ? "allocated"
                                                              : "spring")
     << "/"
     << (sc.control.ff_rate == FeedforwardRate::interval ? "interval" : "tick");
  os << " payload=" << (sc.payload_enabled ? "on" : "off");
  if (sc.payload_enabled) {
    os << " cable_positions="
       << (sc.cable_position_source == CablePositionSource::actual ? "actual"
                                                                   : "desired");
    os << " compression=" << (sc.allow_compression ? "signed" : "slack");
  }
  os << " single_linearization="
     << (sc.control.single_linearization ? "on" : "off");
  os << " literal_innovation="
     << (sc.control.literal_innovation ? "on" : "off");
  os << " noise.payload_force=" << fmt(sc.noise.payload_force_scale);
  os << " noise.position=" << fmt(sc.noise.position_scale) << "/"
     << (sc.noise.position_target == PositionNoiseTarget::allocator
             ? "allocator"
             : "plant");
  os << " noise.measurement=" << fmt(sc.noise.measurement_scale);
  os << " seed=" << sc.seed;
  return os.str();
}

}  // namespace swarmlift::sim
