#pragma once
// Data-parallel inner loops of the walk engine: applying a small real mixing
// matrix across component planes and accumulating squared magnitudes.
//
// Each kernel exists as a scalar reference and as SIMD variants compiled in
// separate translation units; one implementation is selected at runtime from
// CPU capabilities (override with QWALK_KERNEL=scalar|avx2|neon).  All
// variants use plain mul/add (no FMA contraction), so results are
// bit-identical across implementations and the equivalence tests assert
// exact equality.

#include <cstddef>
#include <string>
#include <vector>

namespace qwalk::kernels {

// In-place 3-way mix: (a0,a1,a2)[i] <- m(3x3, row-major) * (a0,a1,a2)[i].
using Mix3Fn = void (*)(double* a0, double* a1, double* a2, std::size_t n,
                        const double* m);
// In-place 4-way mix with a row-major 4x4 matrix.
using Mix4Fn = void (*)(double* a0, double* a1, double* a2, double* a3,
                        std::size_t n, const double* m);
// out[i] += p[i]*p[i]
using AccumSqFn = void (*)(const double* p, std::size_t n, double* out);

struct KernelTable {
  const char* name;
  Mix3Fn mix3;
  Mix4Fn mix4;
  AccumSqFn accum_sq;
};

namespace scalar {
void mix3(double* a0, double* a1, double* a2, std::size_t n, const double* m);
void mix4(double* a0, double* a1, double* a2, double* a3, std::size_t n,
          const double* m);
void accum_sq(const double* p, std::size_t n, double* out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define QWALK_KERNELS_X86 1
namespace avx2 {
void mix3(double* a0, double* a1, double* a2, std::size_t n, const double* m);
void mix4(double* a0, double* a1, double* a2, double* a3, std::size_t n,
          const double* m);
void accum_sq(const double* p, std::size_t n, double* out);
}  // namespace avx2
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
#define QWALK_KERNELS_NEON 1
namespace neon {
void mix3(double* a0, double* a1, double* a2, std::size_t n, const double* m);
void mix4(double* a0, double* a1, double* a2, double* a3, std::size_t n,
          const double* m);
void accum_sq(const double* p, std::size_t n, double* out);
}  // namespace neon
#endif

/// Tables usable on this machine, scalar first.
std::vector<const KernelTable*> available();

/// The table selected at startup (CPU detection + QWALK_KERNEL override).
const KernelTable& active();

/// Lookup by name ("scalar", "avx2", "neon"); nullptr when the variant is
/// not usable on this machine.
const KernelTable* by_name(const std::string& name);

}  // namespace qwalk::kernels
