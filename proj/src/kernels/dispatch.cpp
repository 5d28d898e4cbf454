#include "cellshape/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace cellshape::kernels {

#if defined(CELLSHAPE_HAVE_AVX2)
const KernelTable& avx2_kernel_table();
#endif

namespace {

std::atomic<const KernelTable*> g_override{nullptr};

const KernelTable& detect() {
  const char* forced = std::getenv("CELLSHAPE_ISA");
  if (forced != nullptr && std::string_view(forced) == "scalar") return scalar_kernels();
  if (const KernelTable* t = avx2_kernels()) return *t;
  return scalar_kernels();
}

}  // namespace

const KernelTable* avx2_kernels() {
#if defined(CELLSHAPE_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  if (const KernelTable* t = g_override.load(std::memory_order_acquire)) return *t;
  static const KernelTable& detected = detect();
  return detected;
}

void override_kernels(const KernelTable* table) { g_override.store(table, std::memory_order_release); }

}  // namespace cellshape::kernels
