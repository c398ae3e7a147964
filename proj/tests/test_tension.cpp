#include <doctest.h>

#include "swarmlift/tension.hpp"

#include <cmath>
#include <random>

using namespace swarmlift;

namespace {

/// A ring of n quads above the payload, all cords at the same polar angle.
std::vector<Vec3> ring(int n, double radius, double height) {
  std::vector<Vec3> q(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * M_PI * i / n;
    q[static_cast<size_t>(i)] =
        Vec3(radius * std::cos(a), radius * std::sin(a), height);
  }
  return q;
}

}  // namespace

TEST_CASE("load requirement for a static payload is its weight, straight up") {
  Vec3 dir;
  double mag = 0.0;
  tension::load_requirement(Vec3::Zero(), 10.0, 9.81, &dir, &mag);
  CHECK(mag == doctest::Approx(98.1).epsilon(1e-15));
  CHECK((dir - Vec3(0, 0, 1)).norm() < 1e-15);
}

TEST_CASE("accelerating the payload tilts and scales the requirement") {
  Vec3 dir;
  double mag = 0.0;
  tension::load_requirement(Vec3(9.81, 0, 0), 10.0, 9.81, &dir, &mag);
  CHECK(mag == doctest::Approx(98.1 * std::sqrt(2.0)).epsilon(1e-13));
  CHECK(dir.x() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
  CHECK(dir.z() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
}

TEST_CASE("free fall leaves no load to allocate") {
  Vec3 dir;
  double mag = 0.0;
  CHECK_THROWS_AS(
      tension::load_requirement(Vec3(0, 0, -9.81), 10.0, 9.81, &dir, &mag),
      ZeroLoad);
}

TEST_CASE("cable directions are unit vectors from the payload to each quad") {
  const auto quads = ring(4, 3.0, 4.0);
  const auto dirs = tension::cable_directions(quads, Vec3::Zero());
  REQUIRE(dirs.size() == 4);
  for (size_t i = 0; i < 4; ++i) {
    CHECK(dirs[i].norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK((dirs[i] - quads[i].normalized()).norm() < 1e-14);
  }
  CHECK_THROWS_AS(tension::cable_directions({Vec3::Zero()}, Vec3::Zero()),
                  CoincidentEndpoints);
}

TEST_CASE("symmetric ring shares the load equally at the closed-form value") {
  // 20 cords, every cosine 0.9: f = M / (N c) = 98.1 / (20 * 0.9) = 5.45.
  const int n = 20;
  const double c = 0.9;
  const double radius = std::sqrt(1.0 - c * c);
  const auto quads = ring(n, radius, c);
  const auto dirs = tension::cable_directions(quads, Vec3::Zero());
  const auto alloc = tension::allocate(dirs, Vec3(0, 0, 1), 98.1);

  for (int i = 0; i < n; ++i) {
    CHECK(alloc.tensions[static_cast<size_t>(i)] ==
          doctest::Approx(5.45).epsilon(1e-12));
    CHECK(alloc.cosines[static_cast<size_t>(i)] ==
          doctest::Approx(0.9).epsilon(1e-12));
  }
}

TEST_CASE("allocated axial components sum exactly to the load") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> xy(-5.0, 5.0);
  std::uniform_real_distribution<double> up(2.0, 9.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 18);
    std::vector<Vec3> quads(static_cast<size_t>(n));
    for (auto& q : quads) q = Vec3(xy(rng), xy(rng), up(rng));
    const auto dirs = tension::cable_directions(quads, Vec3::Zero());

    const double mag = 50.0 + 100.0 * std::generate_canonical<double, 53>(rng);
    const auto alloc = tension::allocate(dirs, Vec3(0, 0, 1), mag);

    double axial = 0.0;
    for (int i = 0; i < n; ++i)
      axial += alloc.tensions[static_cast<size_t>(i)] *
               alloc.cosines[static_cast<size_t>(i)];
    CHECK(std::abs(axial - mag) < 1e-9);

    // Equal-axial-share closed form: f_i = M / (N c_i).
    for (int i = 0; i < n; ++i) {
      const double closed =
          mag / (n * alloc.cosines[static_cast<size_t>(i)]);
      const double got = alloc.tensions[static_cast<size_t>(i)];
      CHECK(std::abs(got - closed) <= 1e-10 * std::abs(closed));
    }
  }
}

TEST_CASE("off-axis residual vanishes only for symmetric geometry") {
  const auto quads = ring(6, 2.0, 5.0);
  const auto dirs = tension::cable_directions(quads, Vec3::Zero());
  const auto alloc = tension::allocate(dirs, Vec3(0, 0, 1), 98.1);
  CHECK(alloc.off_axis_residual(dirs).norm() < 1e-12);

  // Push one quad sideways: the equal-share allocation no longer cancels
  // laterally, and the residual reports the mismatch.
  auto skew = quads;
  skew[0] += Vec3(3.0, 0, 0);
  const auto dirs2 = tension::cable_directions(skew, Vec3::Zero());
  const auto alloc2 = tension::allocate(dirs2, Vec3(0, 0, 1), 98.1);
  CHECK(alloc2.off_axis_residual(dirs2).norm() > 1e-3);
}

TEST_CASE("a cord nearly orthogonal to the load cannot take a share") {
  // cos = 0.04 < 0.05 for the first cord.
  std::vector<Vec3> quads = ring(5, 1.0, 2.0);
  const double c = 0.04;
  quads[0] = Vec3(std::sqrt(1.0 - c * c) * 30.0, 0.0, c * 30.0);
  const auto dirs = tension::cable_directions(quads, Vec3::Zero());
  CHECK_THROWS_AS(tension::allocate(dirs, Vec3(0, 0, 1), 98.1),
                  DegenerateGeometry);
}
