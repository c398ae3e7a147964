#include "swarmlift/rigid_body.hpp"

#include <cmath>
#include <sstream>

namespace swarmlift::dynamics {

Mat3 rotation_321(double phi, double theta, double psi) {
  const double cf = std::cos(phi), sf = std::sin(phi);
  const double ct = std::cos(theta), st = std::sin(theta);
  const double cp = std::cos(psi), sp = std::sin(psi);
  Mat3 R;
  // Body to inertial for the yaw-pitch-roll sequence.
  R << cp * ct, cp * st * sf - sp * cf, cp * st * cf + sp * sf,
       sp * ct, sp * st * sf + cp * cf, sp * st * cf - cp * sf,
       -st,     ct * sf,               ct * cf;
  return R;
}

Vec3 body_z_axis(double phi, double theta, double psi) {
  const double cf = std::cos(phi), sf = std::sin(phi);
  const double ct = std::cos(theta), st = std::sin(theta);
  const double cp = std::cos(psi), sp = std::sin(psi);
  return Vec3(cf * st * cp + sf * sp, cf * st * sp - sf * cp, ct * cf);
}

Mat3 euler_rate_matrix(double phi, double theta) {
  const double cf = std::cos(phi), sf = std::sin(phi);
  const double ct = std::cos(theta), st = std::sin(theta);
  Mat3 W;
  W << 1.0, 0.0, -st,
       0.0, cf,  ct * sf,
       0.0, -sf, ct * cf;
  return W;
}

Mat3 euler_rate_matrix_inverse(double phi, double theta) {
  const double ct = std::cos(theta);
  if (std::abs(ct) < kGimbalCos) {
    std::ostringstream os;
    os << "euler-rate matrix singular at theta = " << theta;
    throw GimbalLock(os.str());
  }
  const double cf = std::cos(phi), sf = std::sin(phi);
  const double tt = std::tan(theta);
  Mat3 Winv;
  Winv << 1.0, sf * tt, cf * tt,
          0.0, cf,      -sf,
          0.0, sf / ct, cf / ct;
  return Winv;
}

Vec12 state_derivative(const Vec12& s, const ControlInput& u,
                       const Vec3& cable_force, const QuadParams& p) {
  const double phi = s(sx::phi), theta = s(sx::theta), psi = s(sx::psi);
  if (std::abs(theta) >= M_PI / 2.0 - kThetaMargin) {
    std::ostringstream os;
    os << "pitch " << theta << " within " << kThetaMargin << " of +-pi/2";
    throw GimbalLock(os.str());
  }

  const Vec3 vel(s(sx::u), s(sx::v), s(sx::w));
  const Vec3 rates(s(sx::p), s(sx::q), s(sx::r));

  const Vec3 kb = body_z_axis(phi, theta, psi);
  const Vec3 drag(-p.ax * vel.x(), -p.ay * vel.y(), -p.az * vel.z());
  const Vec3 accel = (u.thrust / p.mass) * kb +
                     (cable_force + drag) / p.mass -
                     Vec3(0.0, 0.0, p.gravity);

  const Vec3 euler_rates = euler_rate_matrix_inverse(phi, theta) * rates;

  Vec12 ds;
  ds(sx::x) = vel.x();
  ds(sx::y) = vel.y();
  ds(sx::z) = vel.z();
  ds(sx::phi) = euler_rates.x();
  ds(sx::theta) = euler_rates.y();
  ds(sx::psi) = euler_rates.z();
  ds(sx::u) = accel.x();
  ds(sx::v) = accel.y();
  ds(sx::w) = accel.z();
  ds(sx::p) = (u.torque.x() + (p.iyy - p.izz) * rates.y() * rates.z()) / p.ixx;
  ds(sx::q) = (u.torque.y() + (p.izz - p.ixx) * rates.x() * rates.z()) / p.iyy;
  ds(sx::r) = (u.torque.z() + (p.ixx - p.iyy) * rates.x() * rates.y()) / p.izz;
  return ds;
}

}  // namespace swarmlift::dynamics
