#pragma once

#include "swarmlift/kernels.hpp"

namespace swarmlift::kernels::detail {

namespace scalar {
extern const KernelTable kTable;
}

#if defined(__x86_64__) || defined(_M_X64)
#define SWARMLIFT_HAVE_AVX2_TU 1
namespace avx2 {
extern const KernelTable kTable;
}
#endif

#if defined(__aarch64__)
#define SWARMLIFT_HAVE_NEON_TU 1
namespace neon {
extern const KernelTable kTable;
}
#endif

}  // namespace swarmlift::kernels::detail
