#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace swarmlift {

using Vec3  = Eigen::Vector3d;
using Vec4  = Eigen::Vector4d;
using Mat3  = Eigen::Matrix3d;
using Mat4  = Eigen::Matrix4d;
using Vec12 = Eigen::Matrix<double, 12, 1>;
using Mat12 = Eigen::Matrix<double, 12, 12>;
using Mat12x4 = Eigen::Matrix<double, 12, 4>;
using Mat4x12 = Eigen::Matrix<double, 4, 12>;

/// Index layout of the 12-component rigid-body state
/// [x y z phi theta psi u v w p q r].
namespace sx {
constexpr int x = 0, y = 1, z = 2;
constexpr int phi = 3, theta = 4, psi = 5;
constexpr int u = 6, v = 7, w = 8;
constexpr int p = 9, q = 10, r = 11;
}  // namespace sx

/// Base class for all simulation errors.  Subclasses identify the failure
/// mode; the message carries the offending values.
class SimError : public std::runtime_error {
 public:
  explicit SimError(const std::string& what) : std::runtime_error(what) {}
};

class SingularTriangle : public SimError {
 public:
  using SimError::SimError;
};

class OutOfSchedule : public SimError {
 public:
  using SimError::SimError;
};

class GimbalLock : public SimError {
 public:
  using SimError::SimError;
};

class CoincidentEndpoints : public SimError {
 public:
  using SimError::SimError;
};

class ZeroLoad : public SimError {
 public:
  using SimError::SimError;
};

class DegenerateGeometry : public SimError {
 public:
  using SimError::SimError;
};

class DegenerateForce : public SimError {
 public:
  using SimError::SimError;
};

class AttitudeOutOfRange : public SimError {
 public:
  using SimError::SimError;
};

class NotStabilizable : public SimError {
 public:
  using SimError::SimError;
};

class NonConvergence : public SimError {
 public:
  using SimError::SimError;
};

class ConfigError : public SimError {
 public:
  using SimError::SimError;
};

}  // namespace swarmlift
