#include "swarmlift/metrics.hpp"

#include "swarmlift/guidance.hpp"
#include "swarmlift/kernels.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace swarmlift::sim {

namespace {

void put(std::ostream& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out << buf;
}

template <typename M>
void put_matrix(std::ostream& out, const std::string& prefix, const M& m) {
  for (int r = 0; r < m.rows(); ++r) {
    out << prefix << ".row" << (r + 1) << " = ";
    for (int c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ", ";
      put(out, m(r, c));
    }
    out << "\n";
  }
}

}  // namespace

void containment_check(const Trace& trace, const ScenarioConfig& sc,
                       double* min_weight, double* max_drift) {
  *min_weight = 1.0;
  *max_drift = 0.0;
  std::vector<guidance::BarycentricWeights> initial(
      static_cast<size_t>(trace.n_agents));
  bool have_initial = false;
  for (const TraceTick& tick : trace.ticks) {
    guidance::LeadingTriangle tri;
    for (int k = 0; k < 3; ++k) {
      const AgentSample& lead =
          tick.agents[static_cast<size_t>(sc.leaders[static_cast<size_t>(k)])];
      tri[k] = Vec3(lead.desired(sx::x), lead.desired(sx::y),
                    lead.desired(sx::z));
    }
    for (int i = 0; i < trace.n_agents; ++i) {
      if (sc.is_leader(i)) continue;
      const AgentSample& a = tick.agents[static_cast<size_t>(i)];
      const Vec3 pos(a.actual(sx::x), a.actual(sx::y), a.actual(sx::z));
      const guidance::BarycentricWeights w = guidance::compute_weights(pos, tri);
      if (!have_initial) initial[static_cast<size_t>(i)] = w;
      for (int k = 0; k < 3; ++k) {
        *min_weight = std::min(*min_weight, w[k]);
        *max_drift = std::max(
            *max_drift, std::abs(w[k] - initial[static_cast<size_t>(i)][k]));
      }
    }
    have_initial = true;
  }
}

MetricsReport compute_metrics(const Trace& trace, const ScenarioConfig& sc) {
  MetricsReport report;
  const int n = trace.n_agents;
  report.agents.resize(static_cast<size_t>(n));
  const size_t total = trace.ticks.size();
  const size_t used = total > 1 ? total - 1 : total;
  report.samples_used = static_cast<int>(used);

  std::vector<std::array<double, 144>> acc12(static_cast<size_t>(n));
  std::vector<std::array<double, 9>> acc_pos(static_cast<size_t>(n));
  std::vector<std::array<double, 9>> acc_euler(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    acc12[static_cast<size_t>(i)].fill(0.0);
    acc_pos[static_cast<size_t>(i)].fill(0.0);
    acc_euler[static_cast<size_t>(i)].fill(0.0);
  }
  std::vector<double> sum_sq(static_cast<size_t>(n), 0.0);

  report.min_inter_agent_distance =
      std::numeric_limits<double>::infinity();
  for (size_t s = 0; s < total; ++s) {
    const TraceTick& tick = trace.ticks[s];
    for (int i = 0; i < n; ++i) {
      const Vec3 pi(tick.agents[static_cast<size_t>(i)].actual(sx::x),
                    tick.agents[static_cast<size_t>(i)].actual(sx::y),
                    tick.agents[static_cast<size_t>(i)].actual(sx::z));
      for (int j = i + 1; j < n; ++j) {
        const Vec3 pj(tick.agents[static_cast<size_t>(j)].actual(sx::x),
                      tick.agents[static_cast<size_t>(j)].actual(sx::y),
                      tick.agents[static_cast<size_t>(j)].actual(sx::z));
        report.min_inter_agent_distance =
            std::min(report.min_inter_agent_distance, (pi - pj).norm());
      }
    }
    if (s >= used) continue;
    for (int i = 0; i < n; ++i) {
      const AgentSample& a = tick.agents[static_cast<size_t>(i)];
      const Vec12 err = a.actual - a.desired;
      kernels::outer_accumulate(acc12[static_cast<size_t>(i)].data(),
                                err.data(), 12);
      const double pos_err[3] = {err(sx::x), err(sx::y), err(sx::z)};
      const double euler_err[3] = {err(sx::phi), err(sx::theta), err(sx::psi)};
      kernels::outer_accumulate(acc_pos[static_cast<size_t>(i)].data(),
                                pos_err, 3);
      kernels::outer_accumulate(acc_euler[static_cast<size_t>(i)].data(),
                                euler_err, 3);
      sum_sq[static_cast<size_t>(i)] += pos_err[0] * pos_err[0] +
                                        pos_err[1] * pos_err[1] +
                                        pos_err[2] * pos_err[2];
      report.agents[static_cast<size_t>(i)].max_pos_error = std::max(
          report.agents[static_cast<size_t>(i)].max_pos_error,
          std::sqrt(pos_err[0] * pos_err[0] + pos_err[1] * pos_err[1] +
                    pos_err[2] * pos_err[2]));
    }
  }
  if (n < 2) report.min_inter_agent_distance = 0.0;

  const double inv = 1.0 / static_cast<double>(used);
  for (int i = 0; i < n; ++i) {
    AgentMetrics& am = report.agents[static_cast<size_t>(i)];
    for (int r = 0; r < 12; ++r)
      for (int c = 0; c < 12; ++c)
        am.q_actual(r, c) = acc12[static_cast<size_t>(i)][static_cast<size_t>(r * 12 + c)] * inv;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        am.q_pos(r, c) = acc_pos[static_cast<size_t>(i)][static_cast<size_t>(r * 3 + c)] * inv;
        am.q_euler(r, c) = acc_euler[static_cast<size_t>(i)][static_cast<size_t>(r * 3 + c)] * inv;
      }
    am.rms_pos_error = std::sqrt(sum_sq[static_cast<size_t>(i)] * inv);
    const Eigen::SelfAdjointEigenSolver<Mat3> es_pos(am.q_pos);
    am.pos_eigenvalues = es_pos.eigenvalues();
    am.pos_eigenvectors = es_pos.eigenvectors();
    const Eigen::SelfAdjointEigenSolver<Mat3> es_euler(am.q_euler);
    am.euler_eigenvalues = es_euler.eigenvalues();
  }

  if (sc.mode == MissionMode::continuum && n >= 4) {
    report.has_containment = true;
    containment_check(trace, sc, &report.containment_min_weight,
                      &report.containment_max_drift);
  }
  report.flags = describe_flags(sc);
  report.flags += " kernels=";
  report.flags += kernels::backend_name(kernels::active());
  return report;
}

void write_metrics(const MetricsReport& report, std::ostream& out) {
  out << "# swarmlift metrics\n";
  out << "flags: " << report.flags << "\n";
  out << "samples = " << report.samples_used << "\n";
  out << "min_inter_agent_distance = ";
  put(out, report.min_inter_agent_distance);
  out << "\n";
  if (report.has_containment) {
    out << "containment.min_weight = ";
    put(out, report.containment_min_weight);
    out << "\n";
    out << "containment.max_drift = ";
    put(out, report.containment_max_drift);
    out << "\n";
  }
  for (size_t i = 0; i < report.agents.size(); ++i) {
    const AgentMetrics& am = report.agents[i];
    const std::string p = "agent." + std::to_string(i + 1);
    out << p << ".rms_pos_error = ";
    put(out, am.rms_pos_error);
    out << "\n";
    out << p << ".max_pos_error = ";
    put(out, am.max_pos_error);
    out << "\n";
    put_matrix(out, p + ".q_pos", am.q_pos);
    out << p << ".q_pos.eigenvalues = ";
    for (int k = 0; k < 3; ++k) {
      if (k > 0) out << ", ";
      put(out, am.pos_eigenvalues(k));
    }
    out << "\n";
    out << p << ".q_pos.dominant_eigenvector = ";
    for (int k = 0; k < 3; ++k) {
      if (k > 0) out << ", ";
      put(out, am.pos_eigenvectors(k, 2));
    }
    out << "\n";
    put_matrix(out, p + ".q_euler", am.q_euler);
    out << p << ".q_euler.eigenvalues = ";
    for (int k = 0; k < 3; ++k) {
      if (k > 0) out << ", ";
      put(out, am.euler_eigenvalues(k));
    }
    out << "\n";
    put_matrix(out, p + ".q_actual", am.q_actual);
  }
}

}  // namespace swarmlift::sim
