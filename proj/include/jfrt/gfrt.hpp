#pragma once

#include <cstddef>
#include <vector>

#include "jfrt/graph.hpp"
#include "jfrt/linalg.hpp"
#include "jfrt/matrix.hpp"

namespace jfrt {

enum class GftFlavor { laplacian, adjacency };

/// Graph Fourier transform F_G together with the diagonalization of F_G
/// itself, which is what fractional powers are taken of.
struct GftOperator {
  ComplexMatrix forward;
  ComplexMatrix inverse;
  GftFlavor flavor = GftFlavor::laplacian;
  FractionalBasis basis;
  /// Laplacian eigenvalues matching the rows of `forward` (laplacian flavor).
  std::vector<double> source_spectrum;

  std::size_t size() const noexcept { return forward.rows(); }
};

/// F_G = Uᴴ from the Laplacian eigenbasis.
GftOperator gft_from_laplacian(const Laplacian& l);

/// F_G = V⁻¹ from the adjacency eigendecomposition A = VΛV⁻¹.
GftOperator gft_from_adjacency(const Graph& g, double max_condition = Tolerances::max_condition);

/// GFT of the directed cycle with F_G = DFT and the discrete Hermite-Gaussian
/// eigenbasis for fractional powers, so F_G^β coincides with the DFRT.
GftOperator gft_from_circulant(std::size_t size);

/// F_G^β.
ComplexMatrix gfrt_matrix(const GftOperator& op, double beta);

/// L_β = U^β·diag(λ^β)·(U^β)ᴴ with U^β = (F_G^β)ᴴ.
struct FractionalLaplacian {
  double order = 1.0;
  ComplexMatrix matrix;
  /// λ^order, aligned with the rows of the fractional transform.
  std::vector<double> spectrum;
  ComplexMatrix vectors_power;
};

FractionalLaplacian fractional_laplacian(const Laplacian& l, double order);
FractionalLaplacian fractional_laplacian(const GftOperator& op, double order);

/// Ring eigenvalues 2 − 2cos(2πn/T) in DFT-index order.
std::vector<double> ring_spectrum(std::size_t size);

/// (L_T)_α for the ring graph C_T, diagonalized by the order-α DFRT:
/// (L_T)_α = (F^α)ᴴ·diag(ω^α)·F^α.
FractionalLaplacian fractional_time_laplacian(std::size_t size, double order);

}  // namespace jfrt
