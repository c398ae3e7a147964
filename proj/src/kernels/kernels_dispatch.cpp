#include "kernels_backends.hpp"

#include "swarmlift/types.hpp"

#include <cstdlib>
#include <string>

namespace swarmlift::kernels {

namespace {

Backend pick_default() {
#if defined(SWARMLIFT_HAVE_AVX2_TU)
  if (__builtin_cpu_supports("avx2")) return Backend::avx2;
#endif
#if defined(SWARMLIFT_HAVE_NEON_TU)
  return Backend::neon;
#endif
  return Backend::scalar;
}

Backend resolve_initial() {
  const char* env = std::getenv("SWARMLIFT_KERNELS");
  if (env == nullptr || std::string(env).empty() || std::string(env) == "auto")
    return pick_default();
  const std::string want(env);
  Backend b = Backend::scalar;
  if (want == "scalar") {
    b = Backend::scalar;
  } else if (want == "avx2") {
    b = Backend::avx2;
  } else if (want == "neon") {
    b = Backend::neon;
  } else {
    throw SimError("SWARMLIFT_KERNELS: unknown backend '" + want + "'");
  }
  if (!available(b))
    throw SimError("SWARMLIFT_KERNELS: backend '" + want +
                   "' not available on this host");
  return b;
}

Backend& active_slot() {
  static Backend current = resolve_initial();
  return current;
}

}  // namespace

bool available(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(SWARMLIFT_HAVE_AVX2_TU)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    case Backend::neon:
#if defined(SWARMLIFT_HAVE_NEON_TU)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend active() { return active_slot(); }

void set_active(Backend b) {
  if (!available(b))
    throw SimError(std::string("kernel backend '") + backend_name(b) +
                   "' not available on this host");
  active_slot() = b;
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "?";
}

std::vector<Backend> runnable_backends() {
  std::vector<Backend> out{Backend::scalar};
  if (available(Backend::avx2)) out.push_back(Backend::avx2);
  if (available(Backend::neon)) out.push_back(Backend::neon);
  return out;
}

namespace detail {

const KernelTable& table_for(Backend b) {
  switch (b) {
#if defined(SWARMLIFT_HAVE_AVX2_TU)
    case Backend::avx2:
      return avx2::kTable;
#endif
#if defined(SWARMLIFT_HAVE_NEON_TU)
    case Backend::neon:
      return neon::kTable;
#endif
    default:
      return scalar::kTable;
  }
}

}  // namespace detail

void stage(double* y, const double* x, const double* k, double a,
           std::size_t n) {
  detail::table_for(active()).stage(y, x, k, a, n);
}

void rk4_combine(double* y, const double* k1, const double* k2,
                 const double* k3, const double* k4, double h6,
                 std::size_t n) {
  detail::table_for(active()).rk4_combine(y, k1, k2, k3, k4, h6, n);
}

void outer_accumulate(double* c, const double* e, std::size_t n) {
  detail::table_for(active()).outer_accumulate(c, e, n);
}

void axpy(double* y, double a, const double* x, std::size_t n) {
  detail::table_for(active()).axpy(y, a, x, n);
}

}  // namespace swarmlift::kernels
