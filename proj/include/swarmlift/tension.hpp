#pragma once

#include "swarmlift/types.hpp"

#include <vector>

namespace swarmlift::tension {

/// Cables whose direction's cosine with the load direction falls at or
/// below this are too oblique to carry a share of the load.
constexpr double kMinCos = 0.05;

/// Load magnitudes below this cannot define a load direction.
constexpr double kMinLoad = 1e-12;

/// Desired tension magnitudes for all cables plus the geometry they were
/// computed from.
struct Allocation {
  std::vector<double> tensions;     ///< f_i >= 0, N
  std::vector<double> cosines;      ///< n_i . n_p per cable
  Vec3 load_direction = Vec3::Zero();
  double load_magnitude = 0.0;      ///< N

  /// Component of the summed cable force off the load axis; zero for an
  /// exact allocation.
  Vec3 off_axis_residual(const std::vector<Vec3>& directions) const;
};

/// Unit vectors from the payload toward each quad.  Throws
/// CoincidentEndpoints if any separation is degenerate.
std::vector<Vec3> cable_directions(const std::vector<Vec3>& quad_positions,
                                   const Vec3& payload_position);

/// Direction and magnitude of the total force the cables must supply so the
/// payload mass follows accel against gravity: m (accel + g K).  Throws
/// ZeroLoad below kMinLoad.
void load_requirement(const Vec3& accel, double mass, double gravity,
                      Vec3* direction, double* magnitude);

/// Distributes the load across cables so every cable contributes the same
/// axial component: solves the N-equation system {f_i c_i = f_{i+1} c_{i+1},
/// sum f_i c_i = magnitude} by forward elimination in O(N), using the
/// bidiagonal-plus-dense-row structure.  Throws DegenerateGeometry when any
/// cosine c_i = n_i . n_p is at or below eps_cos.
Allocation allocate(const std::vector<Vec3>& directions, const Vec3& load_dir,
                    double magnitude, double eps_cos = kMinCos);

}  // namespace swarmlift::tension
