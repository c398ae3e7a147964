#include "kernels_backends.hpp"

// NEON variants for aarch64.  Separate vmul/vadd (no fused multiply-add) so
// results match the scalar path bitwise.

#if defined(SWARMLIFT_HAVE_NEON_TU)

#include <arm_neon.h>

namespace swarmlift::kernels::detail::neon {

namespace {
constexpr std::size_t kLanes = 2;
}

void stage(double* y, const double* x, const double* k, double a,
           std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const float64x2_t vx = vld1q_f64(x + i);
    const float64x2_t vk = vld1q_f64(k + i);
    vst1q_f64(y + i, vaddq_f64(vx, vmulq_f64(va, vk)));
  }
  for (; i < n; ++i) y[i] = x[i] + a * k[i];
}

void rk4_combine(double* y, const double* k1, const double* k2,
                 const double* k3, const double* k4, double h6,
                 std::size_t n) {
  const float64x2_t vh = vdupq_n_f64(h6);
  const float64x2_t two = vdupq_n_f64(2.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const float64x2_t v1 = vld1q_f64(k1 + i);
    const float64x2_t v2 = vld1q_f64(k2 + i);
    const float64x2_t v3 = vld1q_f64(k3 + i);
    const float64x2_t v4 = vld1q_f64(k4 + i);
    float64x2_t s = vaddq_f64(v1, vmulq_f64(two, v2));
    s = vaddq_f64(s, vmulq_f64(two, v3));
    s = vaddq_f64(s, v4);
    const float64x2_t vy = vld1q_f64(y + i);
    vst1q_f64(y + i, vaddq_f64(vy, vmulq_f64(vh, s)));
  }
  for (; i < n; ++i) {
    const double s = k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i];
    y[i] = y[i] + h6 * s;
  }
}

void outer_accumulate(double* c, const double* e, std::size_t n) {
  for (std::size_t r = 0; r < n; ++r) {
    double* row = c + r * n;
    const float64x2_t er = vdupq_n_f64(e[r]);
    std::size_t s = 0;
    for (; s + kLanes <= n; s += kLanes) {
      const float64x2_t ve = vld1q_f64(e + s);
      const float64x2_t vc = vld1q_f64(row + s);
      vst1q_f64(row + s, vaddq_f64(vc, vmulq_f64(er, ve)));
    }
    for (; s < n; ++s) row[s] = row[s] + e[r] * e[s];
  }
}

void axpy(double* y, double a, const double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const float64x2_t vx = vld1q_f64(x + i);
    const float64x2_t vy = vld1q_f64(y + i);
    vst1q_f64(y + i, vaddq_f64(vy, vmulq_f64(va, vx)));
  }
  for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

const KernelTable kTable = {stage, rk4_combine, outer_accumulate, axpy};

}  // namespace swarmlift::kernels::detail::neon

#endif  // SWARMLIFT_HAVE_NEON_TU
