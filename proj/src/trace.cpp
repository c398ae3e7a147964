#include "swarmlift/trace.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace swarmlift::sim {

namespace {

constexpr int kStateCols = 12;

const char* kHeader =
    "time,kind,id,"
    "x,y,z,phi,theta,psi,u,v,w,p,q,r,"
    "est_x,est_y,est_z,est_phi,est_theta,est_psi,est_u,est_v,est_w,est_p,"
    "est_q,est_r,"
    "des_x,des_y,des_z,des_phi,des_theta,des_psi,des_u,des_v,des_w,des_p,"
    "des_q,des_r,"
    "thrust,tau_x,tau_y,tau_z,tension";

void put(std::ostream& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out << buf;
}

void put_vec(std::ostream& out, const double* v, int n) {
  for (int i = 0; i < n; ++i) {
    out << ',';
    put(out, v[i]);
  }
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(line);
  while (std::getline(in, item, ',')) out.push_back(item);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double num(const std::string& s, int line_no) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw SimError("trace line " + std::to_string(line_no) +
                   ": bad number '" + s + "'");
  }
}

}  // namespace

void write_trace_csv(const Trace& trace, std::ostream& out) {
  out << kHeader << '\n';
  for (const TraceTick& tick : trace.ticks) {
    for (size_t i = 0; i < tick.agents.size(); ++i) {
      const AgentSample& a = tick.agents[i];
      put(out, tick.t);
      out << ",agent," << i;
      put_vec(out, a.actual.data(), kStateCols);
      put_vec(out, a.estimated.data(), kStateCols);
      put_vec(out, a.desired.data(), kStateCols);
      put_vec(out, a.input.data(), 4);
      out << ',';
      put(out, a.cable_tension);
      out << '\n';
    }
    if (trace.has_payload) {
      put(out, tick.t);
      out << ",payload,0";
      put_vec(out, tick.payload.position.data(), 3);
      out << ",,,";  // angle columns unused
      put_vec(out, tick.payload.velocity.data(), 3);
      for (int i = 0; i < 3 + kStateCols + kStateCols + 4; ++i) out << ',';
      out << ',';
      put(out, tick.payload.allocation_residual);
      out << '\n';
    }
  }
}

Trace read_trace_csv(std::istream& in) {
  Trace trace;
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) throw SimError("trace: empty input");
  ++line_no;
  if (line != kHeader) throw SimError("trace: unrecognized header");

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv(line);
    if (f.size() != 3 + 3 * kStateCols + 4 + 1)
      throw SimError("trace line " + std::to_string(line_no) +
                     ": expected " + std::to_string(3 + 3 * kStateCols + 5) +
                     " fields, got " + std::to_string(f.size()));
    const double t = num(f[0], line_no);
    const std::string& kind = f[1];
    if (kind == "agent") {
      const int id = static_cast<int>(num(f[2], line_no));
      if (id == 0) {
        trace.ticks.push_back(TraceTick{});
        trace.ticks.back().t = t;
      }
      if (trace.ticks.empty())
        throw SimError("trace line " + std::to_string(line_no) +
                       ": agent row before any tick start");
      TraceTick& tick = trace.ticks.back();
      if (id != static_cast<int>(tick.agents.size()))
        throw SimError("trace line " + std::to_string(line_no) +
                       ": agent rows out of order");
      AgentSample a;
      int c = 3;
      for (int i = 0; i < kStateCols; ++i) a.actual(i) = num(f[static_cast<size_t>(c++)], line_no);
      for (int i = 0; i < kStateCols; ++i) a.estimated(i) = num(f[static_cast<size_t>(c++)], line_no);
      for (int i = 0; i < kStateCols; ++i) a.desired(i) = num(f[static_cast<size_t>(c++)], line_no);
      for (int i = 0; i < 4; ++i) a.input(i) = num(f[static_cast<size_t>(c++)], line_no);
      a.cable_tension = num(f[static_cast<size_t>(c)], line_no);
      tick.agents.push_back(a);
    } else if (kind == "payload") {
      if (trace.ticks.empty())
        throw SimError("trace line " + std::to_string(line_no) +
                       ": payload row before any agent rows");
      trace.has_payload = true;
      TraceTick& tick = trace.ticks.back();
      for (int i = 0; i < 3; ++i)
        tick.payload.position(i) = num(f[static_cast<size_t>(3 + i)], line_no);
      for (int i = 0; i < 3; ++i)
        tick.payload.velocity(i) = num(f[static_cast<size_t>(9 + i)], line_no);
      tick.payload.allocation_residual = num(f.back(), line_no);
    } else {
      throw SimError("trace line " + std::to_string(line_no) +
                     ": unknown row kind '" + kind + "'");
    }
  }
  if (trace.ticks.empty()) throw SimError("trace: no data rows");
  trace.n_agents = static_cast<int>(trace.ticks.front().agents.size());
  for (const TraceTick& tick : trace.ticks)
    if (static_cast<int>(tick.agents.size()) != trace.n_agents)
      throw SimError("trace: inconsistent agent count between ticks");
  return trace;
}

}  // namespace swarmlift::sim
