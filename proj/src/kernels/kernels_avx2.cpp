#include "kernels_backends.hpp"

// AVX2 variants.  Built with -mavx2 -ffp-contract=off and no FMA intrinsics,
// so every element sees the same multiply/add sequence as the scalar path.

#if defined(SWARMLIFT_HAVE_AVX2_TU)

#include <immintrin.h>

namespace swarmlift::kernels::detail::avx2 {

namespace {
constexpr std::size_t kLanes = 4;
}

void stage(double* y, const double* x, const double* k, double a,
           std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d vx = _mm256_loadu_pd(x + i);
    const __m256d vk = _mm256_loadu_pd(k + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(vx, _mm256_mul_pd(va, vk)));
  }
  for (; i < n; ++i) y[i] = x[i] + a * k[i];
}

void rk4_combine(double* y, const double* k1, const double* k2,
                 const double* k3, const double* k4, double h6,
                 std::size_t n) {
  const __m256d vh = _mm256_set1_pd(h6);
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d v1 = _mm256_loadu_pd(k1 + i);
    const __m256d v2 = _mm256_loadu_pd(k2 + i);
    const __m256d v3 = _mm256_loadu_pd(k3 + i);
    const __m256d v4 = _mm256_loadu_pd(k4 + i);
    // Same association as the scalar loop: ((k1 + 2k2) + 2k3) + k4.
    __m256d s = _mm256_add_pd(v1, _mm256_mul_pd(two, v2));
    s = _mm256_add_pd(s, _mm256_mul_pd(two, v3));
    s = _mm256_add_pd(s, v4);
    const __m256d vy = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(vy, _mm256_mul_pd(vh, s)));
  }
  for (; i < n; ++i) {
    const double s = k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i];
    y[i] = y[i] + h6 * s;
  }
}

void outer_accumulate(double* c, const double* e, std::size_t n) {
  for (std::size_t r = 0; r < n; ++r) {
    double* row = c + r * n;
    const __m256d er = _mm256_set1_pd(e[r]);
    std::size_t s = 0;
    for (; s + kLanes <= n; s += kLanes) {
      const __m256d ve = _mm256_loadu_pd(e + s);
      const __m256d vc = _mm256_loadu_pd(row + s);
      _mm256_storeu_pd(row + s, _mm256_add_pd(vc, _mm256_mul_pd(er, ve)));
    }
    for (; s < n; ++s) row[s] = row[s] + e[r] * e[s];
  }
}

void axpy(double* y, double a, const double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d vx = _mm256_loadu_pd(x + i);
    const __m256d vy = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(vy, _mm256_mul_pd(va, vx)));
  }
  for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

const KernelTable kTable = {stage, rk4_combine, outer_accumulate, axpy};

}  // namespace swarmlift::kernels::detail::avx2

#endif  // SWARMLIFT_HAVE_AVX2_TU
