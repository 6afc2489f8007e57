#pragma once

// Data-parallel inner loops behind the transforms.
//
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2+FMA variant. The active table is picked once at first use from the
// CPU features, overridable with JFRT_SIMD=scalar|avx2|auto or select().

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace jfrt::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

struct GemmShape {
  std::size_t m;  // rows of A and C
  std::size_t n;  // cols of B and C
  std::size_t k;  // cols of A, rows of B
};

struct KernelTable {
  Isa isa;
  /// C = A·B for row-major A (m×k), B (k×n), C (m×n). C is overwritten.
  void (*cgemm)(GemmShape shape, std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c);
  /// x[i] *= gains[i].
  void (*scale_by_real)(std::span<const double> gains, std::span<cplx> x);
  /// Σ (a[i] − b[i])².
  double (*squared_distance)(std::span<const double> a, std::span<const double> b);
  /// Σ conj(x[i])·y[i].
  cplx (*dotc)(std::span<const cplx> x, std::span<const cplx> y);
};

const KernelTable& scalar_table() noexcept;

/// Null when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_table() noexcept;

bool cpu_supports_avx2() noexcept;

const KernelTable& active() noexcept;
Isa active_isa() noexcept;

/// Forces a table. Returns false (and leaves the selection alone) when the
/// requested ISA is unavailable.
bool select(Isa isa) noexcept;

}  // namespace jfrt::kernels
