#include "qwalk/kernels.hpp"

#include <cstdlib>

namespace qwalk::kernels {

namespace {

const KernelTable kScalar{"scalar", scalar::mix3, scalar::mix4,
                          scalar::accum_sq};

#if QWALK_KERNELS_X86
const KernelTable kAvx2{"avx2", avx2::mix3, avx2::mix4, avx2::accum_sq};
bool avx2_usable() { return __builtin_cpu_supports("avx2"); }
#endif

#if defined(QWALK_KERNELS_NEON)
const KernelTable kNeon{"neon", neon::mix3, neon::mix4, neon::accum_sq};
#endif

const KernelTable* pick() {
  if (const char* env = std::getenv("QWALK_KERNEL")) {
    if (const KernelTable* t = by_name(env)) return t;
  }
#if QWALK_KERNELS_X86
  if (avx2_usable()) return &kAvx2;
#endif
#if defined(QWALK_KERNELS_NEON)
  return &kNeon;
#endif
  return &kScalar;
}

}  // namespace

std::vector<const KernelTable*> available() {
  std::vector<const KernelTable*> out{&kScalar};
#if QWALK_KERNELS_X86
  if (avx2_usable()) out.push_back(&kAvx2);
#endif
#if defined(QWALK_KERNELS_NEON)
  out.push_back(&kNeon);
#endif
  return out;
}

const KernelTable* by_name(const std::string& name) {
  for (const KernelTable* t : available())
    if (name == t->name) return t;
  return nullptr;
}

const KernelTable& active() {
  static const KernelTable* selected = pick();
  return *selected;
}

}  // namespace qwalk::kernels
