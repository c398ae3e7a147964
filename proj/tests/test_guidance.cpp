#include <doctest.h>

#include "swarmlift/guidance.hpp"

#include <cmath>
#include <random>

using namespace swarmlift;
using guidance::BarycentricWeights;
using guidance::HomogeneousMap;
using guidance::LeadingTriangle;
using guidance::WaypointSchedule;

namespace {

LeadingTriangle tri(double x1, double y1, double x2, double y2, double x3,
                    double y3, double z = 0.0) {
  return LeadingTriangle{{Vec3(x1, y1, z), Vec3(x2, y2, z), Vec3(x3, y3, z)}};
}

Vec3 combine(const BarycentricWeights& w, const LeadingTriangle& t) {
  return w.a1 * t[0] + w.a2 * t[1] + w.a3 * t[2];
}

}  // namespace

TEST_CASE("weights of the origin in the transit formation's start triangle") {
  // Hand solve: a1 = a3 from the x equation, a2 = 1.9 a1 from the y
  // equation, normalization gives a1 = 1/3.9.
  const auto t0 = tri(-20, -20, 0, 20, 20, -18, 50);
  const auto w = guidance::compute_weights(Vec3(0, 0, 50), t0);
  CHECK(w.a1 == doctest::Approx(1.0 / 3.9).epsilon(1e-14));
  CHECK(w.a2 == doctest::Approx(1.9 / 3.9).epsilon(1e-14));
  CHECK(w.a3 == doctest::Approx(1.0 / 3.9).epsilon(1e-14));
  CHECK(w.sum() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("weights reproduce vertices and centroid exactly") {
  const auto t0 = tri(1, 2, 5, 3, 2, 8);
  const auto wv = guidance::compute_weights(t0[1], t0);
  CHECK(wv.a2 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(wv.a1) < 1e-14);
  CHECK(std::abs(wv.a3) < 1e-14);

  const Vec3 centroid = (t0[0] + t0[1] + t0[2]) / 3.0;
  const auto wc = guidance::compute_weights(centroid, t0);
  CHECK(wc.a1 == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(wc.a2 == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(wc.a3 == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("points outside the triangle get a negative weight") {
  const auto t0 = tri(0, 0, 1, 0, 0, 1);
  const auto w = guidance::compute_weights(Vec3(2.0, 2.0, 0), t0);
  CHECK(w.min() < 0.0);
  CHECK(w.sum() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("degenerate triangles are rejected") {
  const auto collinear = tri(0, 0, 1, 1, 2, 2);
  CHECK(!guidance::leading_triangle_ok(collinear));
  CHECK_THROWS_AS(guidance::compute_weights(Vec3::Zero(), collinear),
                  SingularTriangle);
  CHECK_THROWS_AS(guidance::solve_homogeneous_map(collinear, collinear),
                  SingularTriangle);

  // Vertical stacking does not help: the frame lives in the horizontal
  // projection.
  auto stacked = collinear;
  stacked[1].z() = 10.0;
  CHECK(!guidance::leading_triangle_ok(stacked));
}

TEST_CASE("identity, translation, and dilation maps are recovered exactly") {
  const auto t0 = tri(-20, -20, 0, 20, 20, -18, 50);

  const auto ident = guidance::solve_homogeneous_map(t0, t0);
  CHECK((ident.Q - Mat3::Identity()).norm() == doctest::Approx(0.0));
  CHECK(ident.D.norm() == doctest::Approx(0.0));

  auto shifted = t0;
  const Vec3 shift(3.0, -7.0, 0.0);
  for (int k = 0; k < 3; ++k) shifted[k] += shift;
  const auto trans = guidance::solve_homogeneous_map(t0, shifted);
  CHECK((trans.Q - Mat3::Identity()).norm() < 1e-12);
  CHECK((trans.D - shift).norm() < 1e-12);

  auto scaled = t0;
  for (int k = 0; k < 3; ++k) {
    scaled[k].x() *= 2.5;
    scaled[k].y() *= 2.5;
  }
  const auto dil = guidance::solve_homogeneous_map(t0, scaled);
  CHECK(dil.Q(0, 0) == doctest::Approx(2.5).epsilon(1e-13));
  CHECK(dil.Q(1, 1) == doctest::Approx(2.5).epsilon(1e-13));
  CHECK(std::abs(dil.Q(0, 1)) < 1e-12);
  CHECK(std::abs(dil.Q(1, 0)) < 1e-12);
  CHECK(dil.Q(2, 2) == doctest::Approx(1.0));
  CHECK(dil.D.norm() < 1e-11);
}

TEST_CASE("the map acts on the horizontal plane and carries z through") {
  const auto t0 = tri(0, 0, 4, 0, 0, 4, 10);
  auto t1 = tri(1, 1, 9, 1, 1, 9, 10);  // scale 2 then shift (1,1)
  const auto map = guidance::solve_homogeneous_map(t0, t1);
  const Vec3 p(2.0, 1.0, 37.0);
  const Vec3 q = guidance::apply_map(map, p);
  CHECK(q.x() == doctest::Approx(5.0).epsilon(1e-13));
  CHECK(q.y() == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(q.z() == doctest::Approx(37.0));  // untouched
}

TEST_CASE("weights are invariant under a homogeneous deformation") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> d(-10.0, 10.0);
  const auto t0 = tri(-5, -5, 5, -4, 0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    // Random nonsingular deformation of the triangle.
    LeadingTriangle t1;
    do {
      for (int k = 0; k < 3; ++k) t1[k] = Vec3(d(rng), d(rng), 0.0);
    } while (!guidance::leading_triangle_ok(t1));

    std::uniform_real_distribution<double> u(0.05, 0.9);
    double a = u(rng), b = u(rng) * (1.0 - a);
    const Vec3 p0 = combine(BarycentricWeights{a, b, 1.0 - a - b}, t0);
    const auto w0 = guidance::compute_weights(p0, t0);

    const auto map = guidance::solve_homogeneous_map(t0, t1);
    const Vec3 p1 = guidance::apply_map(map, p0);
    const auto w1 = guidance::compute_weights(p1, t1);

    CHECK(std::abs(w0.a1 - w1.a1) < 1e-9);
    CHECK(std::abs(w0.a2 - w1.a2) < 1e-9);
    CHECK(std::abs(w0.a3 - w1.a3) < 1e-9);
  }
}

TEST_CASE("schedule interpolation hits waypoints and holds constant velocity") {
  WaypointSchedule s;
  s.times = {0.0, 10.0, 20.0};
  s.leaders[0] = {Vec3(0, 0, 50), Vec3(10, 0, 50), Vec3(10, 20, 50)};
  s.leaders[1] = {Vec3(5, 5, 50), Vec3(5, 5, 50), Vec3(5, 5, 50)};
  s.leaders[2] = {Vec3(-5, 5, 50), Vec3(-5, -5, 50), Vec3(-5, -15, 50)};

  const auto a0 = guidance::leader_state(s, 0, 0.0);
  CHECK((a0.position - Vec3(0, 0, 50)).norm() == 0.0);
  CHECK((a0.velocity - Vec3(1, 0, 0)).norm() == doctest::Approx(0.0));

  const auto a5 = guidance::leader_state(s, 0, 5.0);
  CHECK((a5.position - Vec3(5, 0, 50)).norm() < 1e-12);

  // Second leg uses the second velocity.
  const auto a15 = guidance::leader_state(s, 0, 15.0);
  CHECK((a15.position - Vec3(10, 10, 50)).norm() < 1e-12);
  CHECK((a15.velocity - Vec3(0, 2, 0)).norm() < 1e-12);

  // The final sample time belongs to the last interval.
  const auto aT = guidance::leader_state(s, 0, 20.0);
  CHECK((aT.position - Vec3(10, 20, 50)).norm() < 1e-12);
  CHECK(guidance::schedule_interval(s, 20.0) == 1);

  CHECK_THROWS_AS(guidance::leader_state(s, 0, -0.1), OutOfSchedule);
  CHECK_THROWS_AS(guidance::leader_state(s, 0, 20.1), OutOfSchedule);
}

TEST_CASE("follower state combines leader states with fixed weights") {
  WaypointSchedule s;
  s.times = {0.0, 4.0};
  s.leaders[0] = {Vec3(0, 0, 50), Vec3(4, 0, 50)};
  s.leaders[1] = {Vec3(0, 4, 50), Vec3(4, 4, 50)};
  s.leaders[2] = {Vec3(-4, 0, 50), Vec3(0, 0, 50)};

  const BarycentricWeights w{0.5, 0.25, 0.25};
  const auto f = guidance::follower_state(w, s, 2.0);
  const Vec3 expect_pos = 0.5 * Vec3(2, 0, 50) + 0.25 * Vec3(2, 4, 50) +
                          0.25 * Vec3(-2, 0, 50);
  CHECK((f.position - expect_pos).norm() < 1e-12);
  CHECK((f.velocity - Vec3(1, 0, 0)).norm() < 1e-12);
}

TEST_CASE("random triangles: weight sum and map consistency") {
  std::mt19937 rng(20260823);
  std::uniform_real_distribution<double> d(-30.0, 30.0);
  std::uniform_real_distribution<double> u(0.02, 0.96);
  int done = 0;
  while (done < 1000) {
    LeadingTriangle t0, t1;
    for (int k = 0; k < 3; ++k) {
      t0[k] = Vec3(d(rng), d(rng), 50.0);
      t1[k] = Vec3(d(rng), d(rng), 50.0);
    }
    if (!guidance::leading_triangle_ok(t0) ||
        !guidance::leading_triangle_ok(t1))
      continue;
    ++done;

    double a = u(rng);
    double b = u(rng) * (1.0 - a);
    const Vec3 p0 = combine(BarycentricWeights{a, b, 1.0 - a - b}, t0);
    const auto w = guidance::compute_weights(p0, t0);
    CHECK(std::abs(w.sum() - 1.0) <= 1e-12);

    const auto map = guidance::solve_homogeneous_map(t0, t1);
    const Vec3 via_map = guidance::apply_map(map, p0);
    const Vec3 via_weights = combine(w, t1);
    CHECK((via_map - via_weights).norm() <= 1e-9);
  }
}
