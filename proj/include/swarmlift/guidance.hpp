#pragma once

#include "swarmlift/types.hpp"

#include <array>
#include <vector>

namespace swarmlift::guidance {

/// Determinant threshold for the leading-triangle rank check, relative to
/// the squared longest edge length.
constexpr double kRankEps = 1e-9;

/// Three leader positions defining the formation's affine frame.  The
/// deformation is planar: z is carried through unchanged.
struct LeadingTriangle {
  std::array<Vec3, 3> r;

  const Vec3& operator[](int k) const { return r[static_cast<size_t>(k)]; }
  Vec3& operator[](int k) { return r[static_cast<size_t>(k)]; }
};

/// Affine map r -> Q r + D with Q(1:2,3) = Q(3,1:2) = 0, Q(3,3) = 1 and
/// D(3) = 0, so the deformation acts in the horizontal plane only.
struct HomogeneousMap {
  Mat3 Q = Mat3::Identity();
  Vec3 D = Vec3::Zero();
};

/// Barycentric coordinates of a follower with respect to the initial
/// leading triangle.  They sum to one and are invariant under any
/// homogeneous map of the formation.
struct BarycentricWeights {
  double a1 = 0.0, a2 = 0.0, a3 = 0.0;

  double sum() const { return a1 + a2 + a3; }
  double min() const { return a1 < a2 ? (a1 < a3 ? a1 : a3) : (a2 < a3 ? a2 : a3); }
  double operator[](int k) const { return k == 0 ? a1 : (k == 1 ? a2 : a3); }
};

/// Piecewise-linear leader waypoint schedule.  times must be strictly
/// increasing; leaders[k][i] is leader k's position at times[i].  Between
/// samples each leader moves with constant velocity.
struct WaypointSchedule {
  std::vector<double> times;
  std::array<std::vector<Vec3>, 3> leaders;

  size_t samples() const { return times.size(); }
  double t_begin() const { return times.front(); }
  double t_end() const { return times.back(); }

  LeadingTriangle triangle_at_sample(size_t i) const {
    return LeadingTriangle{{leaders[0][i], leaders[1][i], leaders[2][i]}};
  }
};

struct PosVel {
  Vec3 position = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
};

/// True if the triangle's horizontal projection has nondegenerate area:
/// |x2-x1  y2-y1; x3-x1  y3-y1| exceeds kRankEps times the squared longest
/// edge.  A triangle failing this check does not define the affine frame.
bool leading_triangle_ok(const LeadingTriangle& tri, double eps = kRankEps);

/// Signed doubled area of the horizontal projection.
double triangle_det(const LeadingTriangle& tri);

/// Solves the linear system expressing p0 as a weighted combination of the
/// triangle vertices with weights summing to one.  Throws SingularTriangle
/// if the triangle fails the rank check.  Weights are negative when p0 lies
/// outside the triangle; callers that require containment check min().
BarycentricWeights compute_weights(const Vec3& p0, const LeadingTriangle& tri0);

/// Recovers the homogeneous map taking tri0's vertices to tri_t's by a
/// direct partial-pivoting solve of the defining linear system.  Throws
/// SingularTriangle if either triangle fails the rank check.
HomogeneousMap solve_homogeneous_map(const LeadingTriangle& tri0,
                                     const LeadingTriangle& tri_t);

Vec3 apply_map(const HomogeneousMap& map, const Vec3& p);

/// Interval index i such that times[i] <= t < times[i+1]; the final sample
/// time maps to the last interval.  Throws OutOfSchedule outside
/// [t_begin, t_end].
size_t schedule_interval(const WaypointSchedule& sched, double t);

/// Leader k's interpolated position and (piecewise-constant) velocity.
PosVel leader_state(const WaypointSchedule& sched, int k, double t);

/// Follower desired position and velocity: the weighted combination of the
/// interpolated leader states.  At sample times the position reproduces the
/// weighted waypoints exactly.
PosVel follower_state(const BarycentricWeights& w, const WaypointSchedule& sched,
                      double t);

}  // namespace swarmlift::guidance
