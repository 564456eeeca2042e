#include <atomic>
#include <stdexcept>

#include "qexmul/kernels.hpp"

namespace qexmul::kernels {

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

namespace {

const KernelTable* pick(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return &scalar_table();
    case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      if (avx2_available()) return &avx2_table();
#endif
      throw std::runtime_error("avx2 kernels not available on this CPU");
    case Backend::Auto:
    default:
#if defined(__x86_64__) || defined(_M_X64)
      if (avx2_available()) return &avx2_table();
#endif
      return &scalar_table();
  }
}

std::atomic<const KernelTable*> g_active{nullptr};

}  // namespace

void select_backend(Backend b) { g_active.store(pick(b), std::memory_order_release); }

const KernelTable& active() {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    t = pick(Backend::Auto);
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

const char* active_name() { return active().name; }

}  // namespace qexmul::kernels
