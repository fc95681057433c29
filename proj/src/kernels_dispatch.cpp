#include "boolprime/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace boolprime::kernels {
namespace {

std::atomic<const KernelTable*> g_active{nullptr};

const KernelTable* detect() {
  if (const char* env = std::getenv("BOOLPRIME_KERNEL")) {
    const std::string_view want{env};
    if (want == "scalar") return &scalar_table();
    if (want == "avx2" && cpu_has_avx2() && avx2_table() != nullptr) return avx2_table();
  }
  if (cpu_has_avx2() && avx2_table() != nullptr) return avx2_table();
  return &scalar_table();
}

}  // namespace

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& active() {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    t = detect();
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

bool select(std::string_view name) {
  if (name == "scalar") {
    g_active.store(&scalar_table(), std::memory_order_release);
    return true;
  }
  if (name == "avx2" && cpu_has_avx2() && avx2_table() != nullptr) {
    g_active.store(avx2_table(), std::memory_order_release);
    return true;
  }
  return false;
}

}  // namespace boolprime::kernels
