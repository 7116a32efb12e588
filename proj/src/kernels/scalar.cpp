// Scalar reference kernels.  Compiled with -ffp-contract=off so the SIMD
// variants (also contraction-free) produce bit-identical results.

#include "qwalk/kernels.hpp"

namespace qwalk::kernels::scalar {

void mix3(double* a0, double* a1, double* a2, std::size_t n, const double* m) {
  for (std::size_t i = 0; i < n; ++i) {
    const double x0 = a0[i], x1 = a1[i], x2 = a2[i];
    a0[i] = m[0] * x0 + m[1] * x1 + m[2] * x2;
    a1[i] = m[3] * x0 + m[4] * x1 + m[5] * x2;
    a2[i] = m[6] * x0 + m[7] * x1 + m[8] * x2;
  }
}

void mix4(double* a0, double* a1, double* a2, double* a3, std::size_t n,
          const double* m) {
  // pairing (m0*x0 + m1*x1) + (m2*x2 + m3*x3) matches the SIMD variants
  for (std::size_t i = 0; i < n; ++i) {
    const double x0 = a0[i], x1 = a1[i], x2 = a2[i], x3 = a3[i];
    a0[i] = (m[0] * x0 + m[1] * x1) + (m[2] * x2 + m[3] * x3);
    a1[i] = (m[4] * x0 + m[5] * x1) + (m[6] * x2 + m[7] * x3);
    a2[i] = (m[8] * x0 + m[9] * x1) + (m[10] * x2 + m[11] * x3);
    a3[i] = (m[12] * x0 + m[13] * x1) + (m[14] * x2 + m[15] * x3);
  }
}

void accum_sq(const double* p, std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] += p[i] * p[i];
}

}  // namespace qwalk::kernels::scalar
