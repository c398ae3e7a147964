#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace swarmlift::kernels {

/// Elementwise double-precision kernels used by the integrator and the
/// metrics accumulators.  Each kernel has a scalar reference implementation
/// and, where the host supports it, a SIMD variant (AVX2 on x86-64, NEON on
/// aarch64).  All variants are compiled with FP contraction disabled and use
/// separate multiply/add, so results are bitwise identical across backends.
enum class Backend { scalar, avx2, neon };

/// Backend chosen at startup: best available unless overridden by the
/// SWARMLIFT_KERNELS environment variable (scalar|avx2|neon|auto).
Backend active();

/// True if the backend's code path can run on this host.
bool available(Backend b);

/// Force a specific backend.  Throws SimError if unavailable on this host.
void set_active(Backend b);

const char* backend_name(Backend b);

/// All backends runnable on this host (always contains scalar).
std::vector<Backend> runnable_backends();

/// y[i] = x[i] + a * k[i]
void stage(double* y, const double* x, const double* k, double a, std::size_t n);

/// y[i] += h6 * (k1[i] + 2 k2[i] + 2 k3[i] + k4[i])
void rk4_combine(double* y, const double* k1, const double* k2,
                 const double* k3, const double* k4, double h6, std::size_t n);

/// c[r*n + s] += e[r] * e[s]  for the full n-by-n row-major block.
void outer_accumulate(double* c, const double* e, std::size_t n);

/// y[i] += a * x[i]
void axpy(double* y, double a, const double* x, std::size_t n);

namespace detail {

struct KernelTable {
  void (*stage)(double*, const double*, const double*, double, std::size_t);
  void (*rk4_combine)(double*, const double*, const double*, const double*,
                      const double*, double, std::size_t);
  void (*outer_accumulate)(double*, const double*, std::size_t);
  void (*axpy)(double*, double, const double*, std::size_t);
};

const KernelTable& table_for(Backend b);

}  // namespace detail

}  // namespace swarmlift::kernels
