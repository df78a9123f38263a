#include <atomic>
#include <stdexcept>

#include "colombeau/kernels/simd.hpp"

namespace colombeau::simd {

#ifndef COLOMBEAU_BUILD_AVX2
const KernelTable* avx2_kernels() { return nullptr; }
#endif

namespace {

bool cpu_has_avx2() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* table_for(Isa isa) {
  return isa == Isa::avx2 ? avx2_kernels() : &scalar_kernels();
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

std::string_view name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
  static const Isa isa = (avx2_kernels() != nullptr && cpu_has_avx2()) ? Isa::avx2 : Isa::scalar;
  return isa;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (isa == Isa::avx2 && detected_isa() != Isa::avx2) {
    throw std::invalid_argument("avx2 kernels unavailable on this build or CPU");
  }
  active().store(isa, std::memory_order_relaxed);
}

const KernelTable& kernels() { return *table_for(active_isa()); }

}  // namespace colombeau::simd
