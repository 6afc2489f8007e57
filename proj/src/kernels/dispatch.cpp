#include <atomic>
#include <cstdlib>
#include <string_view>

#include "variants.hpp"

namespace jfrt::kernels {

namespace {

constexpr KernelTable kScalar{
    Isa::scalar,
    detail::cgemm_scalar,
    detail::scale_by_real_scalar,
    detail::squared_distance_scalar,
    detail::dotc_scalar,
};

#if defined(JFRT_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2{
    Isa::avx2,
    detail::cgemm_avx2,
    detail::scale_by_real_avx2,
    detail::squared_distance_avx2,
    detail::dotc_avx2,
};
#endif

const KernelTable* initial_table() noexcept {
  const char* env = std::getenv("JFRT_SIMD");
  const std::string_view request = env ? env : "auto";
  if (request == "scalar") return &kScalar;
  if (const KernelTable* t = avx2_table()) return t;
  return &kScalar;
}

std::atomic<const KernelTable*>& current() noexcept {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool cpu_supports_avx2() noexcept {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& scalar_table() noexcept { return kScalar; }

const KernelTable* avx2_table() noexcept {
#if defined(JFRT_HAVE_AVX2_KERNELS)
  return cpu_supports_avx2() ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() noexcept { return *current().load(std::memory_order_acquire); }

Isa active_isa() noexcept { return active().isa; }

bool select(Isa isa) noexcept {
  const KernelTable* t = isa == Isa::scalar ? &kScalar : avx2_table();
  if (!t) return false;
  current().store(t, std::memory_order_release);
  return true;
}

}  // namespace jfrt::kernels
