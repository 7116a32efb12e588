// AVX2 kernels.  mul/add only (no FMA) to stay bit-identical with the scalar
// reference; the throughput win comes from the 4-wide lanes, not contraction.

#include "qwalk/kernels.hpp"

#if QWALK_KERNELS_X86

#include <immintrin.h>

namespace qwalk::kernels::avx2 {

void mix3(double* a0, double* a1, double* a2, std::size_t n, const double* m) {
  const __m256d m00 = _mm256_set1_pd(m[0]), m01 = _mm256_set1_pd(m[1]),
                m02 = _mm256_set1_pd(m[2]), m10 = _mm256_set1_pd(m[3]),
                m11 = _mm256_set1_pd(m[4]), m12 = _mm256_set1_pd(m[5]),
                m20 = _mm256_set1_pd(m[6]), m21 = _mm256_set1_pd(m[7]),
                m22 = _mm256_set1_pd(m[8]);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x0 = _mm256_loadu_pd(a0 + i);
    const __m256d x1 = _mm256_loadu_pd(a1 + i);
    const __m256d x2 = _mm256_loadu_pd(a2 + i);
    _mm256_storeu_pd(a0 + i,
                     _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(m00, x0),
                                                 _mm256_mul_pd(m01, x1)),
                                   _mm256_mul_pd(m02, x2)));
    _mm256_storeu_pd(a1 + i,
                     _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(m10, x0),
                                                 _mm256_mul_pd(m11, x1)),
                                   _mm256_mul_pd(m12, x2)));
    _mm256_storeu_pd(a2 + i,
                     _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(m20, x0),
                                                 _mm256_mul_pd(m21, x1)),
                                   _mm256_mul_pd(m22, x2)));
  }
  if (i < n) scalar::mix3(a0 + i, a1 + i, a2 + i, n - i, m);
}

void mix4(double* a0, double* a1, double* a2, double* a3, std::size_t n,
          const double* m) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x0 = _mm256_loadu_pd(a0 + i);
    const __m256d x1 = _mm256_loadu_pd(a1 + i);
    const __m256d x2 = _mm256_loadu_pd(a2 + i);
    const __m256d x3 = _mm256_loadu_pd(a3 + i);
    double* outs[4] = {a0 + i, a1 + i, a2 + i, a3 + i};
    for (int r = 0; r < 4; ++r) {
      const __m256d s01 =
          _mm256_add_pd(_mm256_mul_pd(_mm256_set1_pd(m[4 * r + 0]), x0),
                        _mm256_mul_pd(_mm256_set1_pd(m[4 * r + 1]), x1));
      const __m256d s23 =
          _mm256_add_pd(_mm256_mul_pd(_mm256_set1_pd(m[4 * r + 2]), x2),
                        _mm256_mul_pd(_mm256_set1_pd(m[4 * r + 3]), x3));
      _mm256_storeu_pd(outs[r], _mm256_add_pd(s01, s23));
    }
  }
  if (i < n) scalar::mix4(a0 + i, a1 + i, a2 + i, a3 + i, n - i, m);
}

void accum_sq(const double* p, std::size_t n, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(p + i);
    _mm256_storeu_pd(out + i,
                     _mm256_add_pd(_mm256_loadu_pd(out + i), _mm256_mul_pd(x, x)));
  }
  if (i < n) scalar::accum_sq(p + i, n - i, out + i);
}

}  // namespace qwalk::kernels::avx2

#endif  // QWALK_KERNELS_X86
