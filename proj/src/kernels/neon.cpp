// NEON kernels (aarch64).  Same contraction-free arithmetic as the scalar
// reference, 2-wide double lanes.

#include "qwalk/kernels.hpp"

#if defined(QWALK_KERNELS_NEON)

#include <arm_neon.h>

namespace qwalk::kernels::neon {

void mix3(double* a0, double* a1, double* a2, std::size_t n, const double* m) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t x0 = vld1q_f64(a0 + i);
    const float64x2_t x1 = vld1q_f64(a1 + i);
    const float64x2_t x2 = vld1q_f64(a2 + i);
    for (int r = 0; r < 3; ++r) {
      const float64x2_t s = vaddq_f64(
          vaddq_f64(vmulq_n_f64(x0, m[3 * r + 0]), vmulq_n_f64(x1, m[3 * r + 1])),
          vmulq_n_f64(x2, m[3 * r + 2]));
      vst1q_f64(r == 0 ? a0 + i : (r == 1 ? a1 + i : a2 + i), s);
    }
  }
  if (i < n) scalar::mix3(a0 + i, a1 + i, a2 + i, n - i, m);
}

void mix4(double* a0, double* a1, double* a2, double* a3, std::size_t n,
          const double* m) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t x0 = vld1q_f64(a0 + i);
    const float64x2_t x1 = vld1q_f64(a1 + i);
    const float64x2_t x2 = vld1q_f64(a2 + i);
    const float64x2_t x3 = vld1q_f64(a3 + i);
    double* outs[4] = {a0 + i, a1 + i, a2 + i, a3 + i};
    for (int r = 0; r < 4; ++r) {
      const float64x2_t s01 = vaddq_f64(vmulq_n_f64(x0, m[4 * r + 0]),
                                        vmulq_n_f64(x1, m[4 * r + 1]));
      const float64x2_t s23 = vaddq_f64(vmulq_n_f64(x2, m[4 * r + 2]),
                                        vmulq_n_f64(x3, m[4 * r + 3]));
      vst1q_f64(outs[r], vaddq_f64(s01, s23));
    }
  }
  if (i < n) scalar::mix4(a0 + i, a1 + i, a2 + i, a3 + i, n - i, m);
}

void accum_sq(const double* p, std::size_t n, double* out) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t x = vld1q_f64(p + i);
    vst1q_f64(out + i, vaddq_f64(vld1q_f64(out + i), vmulq_f64(x, x)));
  }
  if (i < n) scalar::accum_sq(p + i, n - i, out + i);
}

}  // namespace qwalk::kernels::neon

#endif  // QWALK_KERNELS_NEON
