#include "swarmlift/guidance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace swarmlift::guidance {

namespace {

double horizontal_edge_sq(const Vec3& a, const Vec3& b) {
  const double dx = b.x() - a.x();
  const double dy = b.y() - a.y();
  return dx * dx + dy * dy;
}

std::string triangle_str(const LeadingTriangle& tri) {
  std::ostringstream os;
  for (int k = 0; k < 3; ++k)
    os << " (" << tri[k].x() << ", " << tri[k].y() << ", " << tri[k].z() << ")";
  return os.str();
}

}  // namespace

double triangle_det(const LeadingTriangle& tri) {
  const double e2x = tri[1].x() - tri[0].x();
  const double e2y = tri[1].y() - tri[0].y();
  const double e3x = tri[2].x() - tri[0].x();
  const double e3y = tri[2].y() - tri[0].y();
  return e2x * e3y - e3x * e2y;
}

bool leading_triangle_ok(const LeadingTriangle& tri, double eps) {
  const double max_edge_sq =
      std::max({horizontal_edge_sq(tri[0], tri[1]),
                horizontal_edge_sq(tri[0], tri[2]),
                horizontal_edge_sq(tri[1], tri[2])});
  return std::abs(triangle_det(tri)) > eps * max_edge_sq;
}

BarycentricWeights compute_weights(const Vec3& p0, const LeadingTriangle& tri0) {
  if (!leading_triangle_ok(tri0))
    throw SingularTriangle("leading triangle is rank deficient:" +
                           triangle_str(tri0));
  // Eliminating the unit-sum row reduces the 3x3 weight system to a 2x2
  // edge system; a1 = 1 - a2 - a3 keeps the weight sum exactly one.
  const double e2x = tri0[1].x() - tri0[0].x();
  const double e2y = tri0[1].y() - tri0[0].y();
  const double e3x = tri0[2].x() - tri0[0].x();
  const double e3y = tri0[2].y() - tri0[0].y();
  const double dx = p0.x() - tri0[0].x();
  const double dy = p0.y() - tri0[0].y();
  const double det = e2x * e3y - e3x * e2y;
  BarycentricWeights w;
  w.a2 = (dx * e3y - e3x * dy) / det;
  w.a3 = (e2x * dy - dx * e2y) / det;
  w.a1 = 1.0 - w.a2 - w.a3;
  return w;
}

HomogeneousMap solve_homogeneous_map(const LeadingTriangle& tri0,
                                     const LeadingTriangle& tri_t) {
  if (!leading_triangle_ok(tri0))
    throw SingularTriangle("initial leading triangle is rank deficient:" +
                           triangle_str(tri0));
  if (!leading_triangle_ok(tri_t))
    throw SingularTriangle("current leading triangle is rank deficient:" +
                           triangle_str(tri_t));
  // The six unknowns (Q11 Q12 D1) and (Q21 Q22 D2) decouple into two 3x3
  // systems sharing the coefficient matrix [x_k0  y_k0  1].
  Mat3 A;
  Eigen::Matrix<double, 3, 2> rhs;
  for (int k = 0; k < 3; ++k) {
    A(k, 0) = tri0[k].x();
    A(k, 1) = tri0[k].y();
    A(k, 2) = 1.0;
    rhs(k, 0) = tri_t[k].x();
    rhs(k, 1) = tri_t[k].y();
  }
  const Eigen::Matrix<double, 3, 2> sol = A.partialPivLu().solve(rhs);
  HomogeneousMap map;
  map.Q(0, 0) = sol(0, 0);
  map.Q(0, 1) = sol(1, 0);
  map.D(0) = sol(2, 0);
  map.Q(1, 0) = sol(0, 1);
  map.Q(1, 1) = sol(1, 1);
  map.D(1) = sol(2, 1);
  return map;
}

Vec3 apply_map(const HomogeneousMap& map, const Vec3& p) {
  return map.Q * p + map.D;
}

size_t schedule_interval(const WaypointSchedule& sched, double t) {
  if (sched.times.size() < 2)
    throw OutOfSchedule("waypoint schedule needs at least two samples");
  if (t < sched.t_begin() || t > sched.t_end()) {
    std::ostringstream os;
    os << "time " << t << " outside schedule [" << sched.t_begin() << ", "
       << sched.t_end() << "]";
    throw OutOfSchedule(os.str());
  }
  if (t == sched.t_end()) return sched.times.size() - 2;
  const auto it = std::upper_bound(sched.times.begin(), sched.times.end(), t);
  return static_cast<size_t>(it - sched.times.begin()) - 1;
}

PosVel leader_state(const WaypointSchedule& sched, int k, double t) {
  const size_t i = schedule_interval(sched, t);
  const Vec3& a = sched.leaders[static_cast<size_t>(k)][i];
  const Vec3& b = sched.leaders[static_cast<size_t>(k)][i + 1];
  const double dt = sched.times[i + 1] - sched.times[i];
  const double s = (t - sched.times[i]) / dt;
  PosVel out;
  out.position = (1.0 - s) * a + s * b;
  out.velocity = (b - a) / dt;
  return out;
}

PosVel follower_state(const BarycentricWeights& w, const WaypointSchedule& sched,
                      double t) {
  PosVel out;
  for (int k = 0; k < 3; ++k) {
    const PosVel lk = leader_state(sched, k, t);
    out.position += w[k] * lk.position;
    out.velocity += w[k] * lk.velocity;
  }
  return out;
}

}  // namespace swarmlift::guidance
