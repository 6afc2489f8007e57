#pragma once

#include "jfrt/kernels.hpp"

namespace jfrt::kernels::detail {

void cgemm_scalar(GemmShape shape, std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c);
void scale_by_real_scalar(std::span<const double> gains, std::span<cplx> x);
double squared_distance_scalar(std::span<const double> a, std::span<const double> b);
cplx dotc_scalar(std::span<const cplx> x, std::span<const cplx> y);

#if defined(JFRT_HAVE_AVX2_KERNELS)
void cgemm_avx2(GemmShape shape, std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c);
void scale_by_real_avx2(std::span<const double> gains, std::span<cplx> x);
double squared_distance_avx2(std::span<const double> a, std::span<const double> b);
cplx dotc_avx2(std::span<const cplx> x, std::span<const cplx> y);
#endif

}  // namespace jfrt::kernels::detail
