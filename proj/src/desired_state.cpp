#include "swarmlift/desired_state.hpp"

#include <cmath>
#include <sstream>

namespace swarmlift::desired {

ThrustAttitude desired_thrust_attitude(const Vec3& accel, const Vec3& vel,
                                       const Vec3& cable_force,
                                       const dynamics::QuadParams& p,
                                       double psi) {
  const Vec3 drag(-p.ax * vel.x(), -p.ay * vel.y(), -p.az * vel.z());
  const Vec3 needed = p.mass * accel + Vec3(0.0, 0.0, p.mass * p.gravity) -
                      drag - cable_force;
  const double thrust = needed.norm();
  if (thrust < kMinThrust) {
    std::ostringstream os;
    os << "required thrust " << thrust << " below " << kMinThrust
       << "; thrust direction undefined";
    throw DegenerateForce(os.str());
  }
  const Vec3 b = needed / thrust;

  const double sp = std::sin(psi), cp = std::cos(psi);
  const double sin_phi = b.x() * sp - b.y() * cp;
  if (std::abs(sin_phi) >= 1.0) {
    std::ostringstream os;
    os << "thrust direction (" << b.x() << ", " << b.y() << ", " << b.z()
       << ") needs |roll| >= pi/2 at yaw " << psi;
    throw AttitudeOutOfRange(os.str());
  }
  const double phi = std::asin(sin_phi);
  const double theta = std::atan2(b.x() * cp + b.y() * sp, b.z());
  if (std::abs(theta) >= M_PI / 2.0) {
    std::ostringstream os;
    os << "thrust direction (" << b.x() << ", " << b.y() << ", " << b.z()
       << ") needs |pitch| >= pi/2";
    throw AttitudeOutOfRange(os.str());
  }

  ThrustAttitude ta;
  ta.thrust = thrust;
  ta.body_z = b;
  ta.phi = phi;
  ta.theta = theta;
  return ta;
}

Vec3 body_rates(double phi, double theta, const Vec3& euler_rates) {
  return dynamics::euler_rate_matrix(phi, theta) * euler_rates;
}

Vec3 desired_torques(const Vec3& rates, const Vec3& rate_derivs,
                     const dynamics::QuadParams& p) {
  return Vec3(
      p.ixx * rate_derivs.x() - (p.iyy - p.izz) * rates.y() * rates.z(),
      p.iyy * rate_derivs.y() - (p.izz - p.ixx) * rates.x() * rates.z(),
      p.izz * rate_derivs.z() - (p.ixx - p.iyy) * rates.x() * rates.y());
}

Assembly assemble(const Vec3& position, const Vec3& velocity,
                  const Vec3& accel, const Vec3& cable_force,
                  const dynamics::QuadParams& p, double psi,
                  const Assembly& prev, double dt, bool first) {
  Assembly out;
  out.ta = desired_thrust_attitude(accel, velocity, cable_force, p, psi);

  out.state(sx::x) = position.x();
  out.state(sx::y) = position.y();
  out.state(sx::z) = position.z();
  out.state(sx::phi) = out.ta.phi;
  out.state(sx::theta) = out.ta.theta;
  out.state(sx::psi) = psi;
  out.state(sx::u) = velocity.x();
  out.state(sx::v) = velocity.y();
  out.state(sx::w) = velocity.z();

  Vec3 rates = Vec3::Zero();
  Vec3 rate_derivs = Vec3::Zero();
  if (!first) {
    const Vec3 euler_rates((out.ta.phi - prev.state(sx::phi)) / dt,
                           (out.ta.theta - prev.state(sx::theta)) / dt,
                           (psi - prev.state(sx::psi)) / dt);
    rates = body_rates(out.ta.phi, out.ta.theta, euler_rates);
    const Vec3 prev_rates(prev.state(sx::p), prev.state(sx::q),
                          prev.state(sx::r));
    rate_derivs = (rates - prev_rates) / dt;
  }
  out.state(sx::p) = rates.x();
  out.state(sx::q) = rates.y();
  out.state(sx::r) = rates.z();

  const Vec3 torque = desired_torques(rates, rate_derivs, p);
  out.input(0) = out.ta.thrust;
  out.input(1) = torque.x();
  out.input(2) = torque.y();
  out.input(3) = torque.z();
  return out;
}

}  // namespace swarmlift::desired
