#include <immintrin.h>

#include <algorithm>

#include "variants.hpp"

namespace jfrt::kernels::detail {

namespace {

inline double horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// (ar + j·ai)·b for two packed complex values in b.
inline __m256d complex_scale(__m256d ar, __m256d ai, __m256d b) {
  const __m256d swapped = _mm256_permute_pd(b, 0b0101);
  return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, swapped));
}

}  // namespace

void cgemm_avx2(GemmShape shape, std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c) {
  const auto [m, n, k] = shape;
  std::fill(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(m * n), cplx{});
  const std::size_t n4 = n - n % 4;
  const std::size_t n2 = n - n % 2;
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = reinterpret_cast<double*>(c.data() + i * n);
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      if (aip == cplx{}) continue;
      const __m256d ar = _mm256_set1_pd(aip.real());
      const __m256d ai = _mm256_set1_pd(aip.imag());
      const double* bp = reinterpret_cast<const double*>(b.data() + p * n);
      std::size_t j = 0;
      for (; j < n4; j += 4) {
        const __m256d b0 = _mm256_loadu_pd(bp + 2 * j);
        const __m256d b1 = _mm256_loadu_pd(bp + 2 * j + 4);
        const __m256d c0 = _mm256_loadu_pd(ci + 2 * j);
        const __m256d c1 = _mm256_loadu_pd(ci + 2 * j + 4);
        _mm256_storeu_pd(ci + 2 * j, _mm256_add_pd(c0, complex_scale(ar, ai, b0)));
        _mm256_storeu_pd(ci + 2 * j + 4, _mm256_add_pd(c1, complex_scale(ar, ai, b1)));
      }
      for (; j < n2; j += 2) {
        const __m256d b0 = _mm256_loadu_pd(bp + 2 * j);
        const __m256d c0 = _mm256_loadu_pd(ci + 2 * j);
        _mm256_storeu_pd(ci + 2 * j, _mm256_add_pd(c0, complex_scale(ar, ai, b0)));
      }
      for (; j < n; ++j) {
        const double br = bp[2 * j];
        const double bi = bp[2 * j + 1];
        ci[2 * j] += aip.real() * br - aip.imag() * bi;
        ci[2 * j + 1] += aip.real() * bi + aip.imag() * br;
      }
    }
  }
}

void scale_by_real_avx2(std::span<const double> gains, std::span<cplx> x) {
  const std::size_t n = x.size();
  const std::size_t n2 = n - n % 2;
  double* xp = reinterpret_cast<double*>(x.data());
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    const __m128d g = _mm_loadu_pd(gains.data() + i);
    // [g0, g0, g1, g1]
    const __m256d gg = _mm256_permute4x64_pd(_mm256_castpd128_pd256(g), 0b01010000);
    _mm256_storeu_pd(xp + 2 * i, _mm256_mul_pd(_mm256_loadu_pd(xp + 2 * i), gg));
  }
  for (; i < n; ++i) x[i] *= gains[i];
}

double squared_distance_avx2(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  const std::size_t n8 = n - n % 8;
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i < n8; i += 8) {
    const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i));
    const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(a.data() + i + 4), _mm256_loadu_pd(b.data() + i + 4));
    acc0 = _mm256_fmadd_pd(d0, d0, acc0);
    acc1 = _mm256_fmadd_pd(d1, d1, acc1);
  }
  double acc = horizontal_sum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

cplx dotc_avx2(std::span<const cplx> x, std::span<const cplx> y) {
  const std::size_t n = x.size();
  const std::size_t n2 = n - n % 2;
  const double* xp = reinterpret_cast<const double*>(x.data());
  const double* yp = reinterpret_cast<const double*>(y.data());
  __m256d same = _mm256_setzero_pd();   // [xr·yr, xi·yi, ...]
  __m256d cross = _mm256_setzero_pd();  // [xr·yi, xi·yr, ...]
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    same = _mm256_fmadd_pd(xv, yv, same);
    cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), cross);
  }
  alignas(32) double s[4];
  alignas(32) double t[4];
  _mm256_store_pd(s, same);
  _mm256_store_pd(t, cross);
  double re = (s[0] + s[2]) + (s[1] + s[3]);
  double im = (t[0] + t[2]) - (t[1] + t[3]);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

}  // namespace jfrt::kernels::detail
