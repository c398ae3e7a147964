#include "swarmlift/tension.hpp"

#include "swarmlift/payload_cable.hpp"

#include <sstream>

namespace swarmlift::tension {

Vec3 Allocation::off_axis_residual(const std::vector<Vec3>& directions) const {
  Vec3 total = Vec3::Zero();
  for (size_t i = 0; i < tensions.size(); ++i)
    total += tensions[i] * directions[i];
  return total - total.dot(load_direction) * load_direction;
}

std::vector<Vec3> cable_directions(const std::vector<Vec3>& quad_positions,
                                   const Vec3& payload_position) {
  std::vector<Vec3> dirs;
  dirs.reserve(quad_positions.size());
  for (size_t i = 0; i < quad_positions.size(); ++i) {
    const Vec3 d = quad_positions[i] - payload_position;
    const double len = d.norm();
    if (len < payload::kMinSeparation) {
      std::ostringstream os;
      os << "cable " << i << ": quad and payload coincide";
      throw CoincidentEndpoints(os.str());
    }
    dirs.push_back(d / len);
  }
  return dirs;
}

void load_requirement(const Vec3& accel, double mass, double gravity,
                      Vec3* direction, double* magnitude) {
  const Vec3 f = mass * (accel + Vec3(0.0, 0.0, gravity));
  const double m = f.norm();
  if (m < kMinLoad) {
    std::ostringstream os;
    os << "required load magnitude " << m << " too small to define a direction";
    throw ZeroLoad(os.str());
  }
  *direction = f / m;
  *magnitude = m;
}

Allocation allocate(const std::vector<Vec3>& directions, const Vec3& load_dir,
                    double magnitude, double eps_cos) {
  const size_t n = directions.size();
  Allocation out;
  out.load_direction = load_dir;
  out.load_magnitude = magnitude;
  out.cosines.resize(n);
  for (size_t i = 0; i < n; ++i) {
    out.cosines[i] = directions[i].dot(load_dir);
    if (out.cosines[i] <= eps_cos) {
      std::ostringstream os;
      os << "cable " << i << " nearly orthogonal to the load direction (cos = "
         << out.cosines[i] << ", limit " << eps_cos << ")";
      throw DegenerateGeometry(os.str());
    }
  }

  // Equal-share system in matrix form: rows i < n-1 couple neighbours
  // (c_i f_i - c_{i+1} f_{i+1} = 0), the dense last row sums the axial
  // components.  Forward elimination: express f_i = ratio_i * f_0 from the
  // bidiagonal rows, substitute into the dense row, back-substitute.
  std::vector<double> ratio(n);
  ratio[0] = 1.0;
  for (size_t i = 1; i < n; ++i)
    ratio[i] = ratio[i - 1] * (out.cosines[i - 1] / out.cosines[i]);
  double denom = 0.0;
  for (size_t i = 0; i < n; ++i) denom += ratio[i] * out.cosines[i];
  const double f0 = magnitude / denom;
  out.tensions.resize(n);
  for (size_t i = 0; i < n; ++i) out.tensions[i] = f0 * ratio[i];
  return out;
}

}  // namespace swarmlift::tension
