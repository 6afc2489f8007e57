#pragma once

#include <cstddef>
#include <vector>

#include "jfrt/gfrt.hpp"
#include "jfrt/matrix.hpp"

namespace jfrt {

/// N×T signal: rows are vertices, columns are time samples.
struct JointSignal {
  ComplexMatrix values;

  std::size_t n_vertices() const noexcept { return values.rows(); }
  std::size_t n_time() const noexcept { return values.cols(); }
};

struct FractionalOrderPair {
  double alpha = 1.0;  // time
  double beta = 1.0;   // graph
};

/// Default cap on NT for materialized NT×NT operators.
inline constexpr std::size_t kDefaultDenseCap = 4096;

/// F_J^{α,β} = F^α ⊗ F_G^β, stored as its two factors.
struct JointOperator {
  FractionalOrderPair order;
  ComplexMatrix gfrt;  // F_G^β, N×N
  ComplexMatrix frt;   // F^α, T×T

  /// F_G^β·X·(F^α)ᵀ.
  ComplexMatrix apply(const ComplexMatrix& x) const;

  /// Explicit NT×NT matrix kron(frt, gfrt).
  ComplexMatrix kronecker(std::size_t cap = kDefaultDenseCap) const;
};

JointOperator joint_operator(const GftOperator& g, std::size_t n_time, FractionalOrderPair order);

/// JFT^{α,β}(X; G) = F_G^β·X·(F^α)ᵀ.
JointSignal jfrt_forward(const JointSignal& x, const GftOperator& g, FractionalOrderPair order);

/// Forward transform at (−α, −β).
JointSignal jfrt_inverse(const JointSignal& y, const GftOperator& g, FractionalOrderPair order);

/// Column-major vectorization (stacked columns) and its inverse.
std::vector<cplx> vec(const ComplexMatrix& x);
ComplexMatrix unvec(std::span<const cplx> v, std::size_t rows, std::size_t cols);

/// Weighted Kronecker sum τ_t·(L_T)_α ⊕ τ_g·(L_G)_β, kept in factored form.
struct JointFractionalLaplacian {
  FractionalOrderPair order;
  FractionalLaplacian time_part;
  FractionalLaplacian graph_part;
  double time_weight = 1.0;
  double graph_weight = 1.0;
  /// Entry (m, n) = τ_g·λ_m^β + τ_t·ω_n^α.
  RealMatrix joint_spectrum;

  std::size_t n_vertices() const noexcept { return graph_part.spectrum.size(); }
  std::size_t n_time() const noexcept { return time_part.spectrum.size(); }

  /// τ_t·(L_T)_α ⊗ I_N + I_T ⊗ τ_g·(L_G)_β.
  ComplexMatrix dense(std::size_t cap = kDefaultDenseCap) const;

  /// vec(X)ᴴ·L·vec(X) = τ_g⟨X, (L_G)_β X⟩ + τ_t⟨X, X (L_T)_αᵀ⟩, evaluated
  /// without forming the Kronecker sum.
  cplx quadratic_form(const ComplexMatrix& x) const;
};

JointFractionalLaplacian joint_fractional_laplacian(const Laplacian& l_graph, std::size_t n_time,
                                                    FractionalOrderPair order);
JointFractionalLaplacian joint_fractional_laplacian(const GftOperator& g, std::size_t n_time,
                                                    FractionalOrderPair order, double tau_g = 1.0,
                                                    double tau_t = 1.0);

/// Real quadratic form xᴴ·L_J·x. Throws NonRealQuadraticForm when the
/// imaginary residual is larger than roundoff explains.
double joint_fractional_variation(const JointSignal& x, const JointFractionalLaplacian& l);

}  // namespace jfrt
