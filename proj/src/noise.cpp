#include "swarmlift/noise.hpp"

#include <cmath>

namespace swarmlift::sim {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t key(std::uint64_t seed, std::uint64_t tick, std::uint64_t agent,
                  std::uint64_t channel, std::uint64_t counter) {
  std::uint64_t h = mix64(seed + 0x9E3779B97F4A7C15ULL);
  h = mix64(h ^ (tick + 0x9E3779B97F4A7C15ULL));
  h = mix64(h ^ (agent + 0xD1B54A32D192ED03ULL));
  h = mix64(h ^ (channel + 0x8CB92BA72F3D8DD7ULL));
  h = mix64(h ^ (counter + 0xEB44ACCAB455D165ULL));
  return h;
}

// Uniform in (0, 1]; safe under log.
double to_unit(std::uint64_t h) {
  return (static_cast<double>(h >> 11) + 1.0) * 0x1.0p-53;
}

}  // namespace

double NoiseStream::gaussian(std::uint64_t tick, std::uint64_t agent,
                             NoiseChannel ch, std::uint64_t index) const {
  const std::uint64_t chv = static_cast<std::uint64_t>(ch);
  const std::uint64_t pair = index / 2;
  const double u1 = to_unit(key(seed_, tick, agent, chv, 2 * pair));
  const double u2 = to_unit(key(seed_, tick, agent, chv, 2 * pair + 1));
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  return (index % 2 == 0) ? r * std::cos(a) : r * std::sin(a);
}

Vec3 NoiseStream::gaussian3(std::uint64_t tick, std::uint64_t agent,
                            NoiseChannel ch, const Mat3& chol_factor) const {
  Vec3 e;
  for (int i = 0; i < 3; ++i)
    e(i) = gaussian(tick, agent, ch, static_cast<std::uint64_t>(i));
  return chol_factor * e;
}

Vec12 NoiseStream::gaussian12(std::uint64_t tick, std::uint64_t agent,
                              NoiseChannel ch, const Mat12& chol_factor) const {
  Vec12 e;
  for (int i = 0; i < 12; ++i)
    e(i) = gaussian(tick, agent, ch, static_cast<std::uint64_t>(i));
  return chol_factor * e;
}

namespace {

template <typename M>
M factor_of(const M& cov, const char* what) {
  const Eigen::LLT<Eigen::MatrixXd> llt{Eigen::MatrixXd(cov)};
  if (llt.info() != Eigen::Success)
    throw ConfigError(std::string(what) +
                      " covariance is not positive definite");
  return M(llt.matrixL());
}

}  // namespace

Mat3 cholesky_factor3(const Mat3& cov) { return factor_of(cov, "3-vector"); }

Mat12 cholesky_factor12(const Mat12& cov) {
  return factor_of(cov, "12-state");
}

}  // namespace swarmlift::sim
