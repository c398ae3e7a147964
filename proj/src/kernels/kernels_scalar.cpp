#include "kernels_backends.hpp"

// Reference implementations.  This translation unit is built with
// -ffp-contract=off so the SIMD variants, which use separate multiply and
// add instructions, produce bitwise-identical results.

namespace swarmlift::kernels::detail::scalar {

void stage(double* y, const double* x, const double* k, double a,
           std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + a * k[i];
}

void rk4_combine(double* y, const double* k1, const double* k2,
                 const double* k3, const double* k4, double h6,
                 std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double s = k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i];
    y[i] = y[i] + h6 * s;
  }
}

void outer_accumulate(double* c, const double* e, std::size_t n) {
  for (std::size_t r = 0; r < n; ++r) {
    double* row = c + r * n;
    const double er = e[r];
    for (std::size_t s = 0; s < n; ++s) row[s] = row[s] + er * e[s];
  }
}

void axpy(double* y, double a, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + a * x[i];
}

const KernelTable kTable = {stage, rk4_combine, outer_accumulate, axpy};

}  // namespace swarmlift::kernels::detail::scalar
