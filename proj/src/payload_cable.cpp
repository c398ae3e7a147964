#include "swarmlift/payload_cable.hpp"

#include <sstream>

namespace swarmlift::payload {

Vec3 cable_force(const Vec3& quad_pos, const Vec3& payload_pos,
                 const CableSpec& cable, bool allow_compression) {
  const Vec3 d = quad_pos - payload_pos;
  const double len = d.norm();
  if (len < kMinSeparation) {
    std::ostringstream os;
    os << "cable " << cable.agent << ": quad and payload coincide (separation "
       << len << ")";
    throw CoincidentEndpoints(os.str());
  }
  const double stretch = len - cable.free_length;
  if (!allow_compression && stretch <= 0.0) return Vec3::Zero();
  return (cable.stiffness * stretch / len) * d;
}

double equilibrium_length(double payload_mass, double gravity, int n_cables,
                          double stiffness, double stretch_ratio) {
  return payload_mass * gravity * stretch_ratio /
         (n_cables * stiffness * (stretch_ratio - 1.0));
}

Vec3 payload_acceleration(const Vec3& payload_vel,
                          const std::vector<Vec3>& cable_forces,
                          const Vec3& disturbance, const PayloadParams& p) {
  Vec3 total = disturbance;
  for (const Vec3& f : cable_forces) total += f;
  total -= p.drag.cwiseProduct(payload_vel);
  return total / p.mass - Vec3(0.0, 0.0, p.gravity);
}

}  // namespace swarmlift::payload
