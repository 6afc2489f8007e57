#include <algorithm>

#include "variants.hpp"

namespace jfrt::kernels::detail {

void cgemm_scalar(GemmShape shape, std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c) {
  const auto [m, n, k] = shape;
  std::fill(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(m * n), cplx{});
  for (std::size_t i = 0; i < m; ++i) {
    cplx* ci = c.data() + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      if (aip == cplx{}) continue;
      const cplx* bp = b.data() + p * n;
      for (std::size_t j = 0; j < n; ++j) {
        // Written out so the scalar and SIMD paths perform the same operations.
        const double re = aip.real() * bp[j].real() - aip.imag() * bp[j].imag();
        const double im = aip.real() * bp[j].imag() + aip.imag() * bp[j].real();
        ci[j] = {ci[j].real() + re, ci[j].imag() + im};
      }
    }
  }
}

void scale_by_real_scalar(std::span<const double> gains, std::span<cplx> x) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] *= gains[i];
}

double squared_distance_scalar(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

cplx dotc_scalar(std::span<const cplx> x, std::span<const cplx> y) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

}  // namespace jfrt::kernels::detail
