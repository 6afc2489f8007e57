#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "jfrt/gfrt.hpp"
#include "jfrt/joint.hpp"

namespace jfrt {

struct RegularizationParams {
  double tau_g = 0.0;
  double tau_t = 0.0;
};

/// h_{m,n} = 1/(1 + τ_g·λ_m^β + τ_t·ω_n^α), the minimizer of the Tikhonov
/// objective in the joint fractional domain.
struct JointFilter {
  FractionalOrderPair order;
  RegularizationParams params;
  RealMatrix coefficients;  // N×T
};

JointFilter build_filter(const JointFractionalLaplacian& l, RegularizationParams params);

/// x̂ = JFRT^{−α,−β}(h ⊙ JFRT^{α,β}(Y)). Needs a Laplacian-flavor GFT.
JointSignal denoise_spectral(const JointSignal& y, const GftOperator& g, FractionalOrderPair order,
                             RegularizationParams params);

/// Same estimate from the dense system (I + L)·vec(x̂) = vec(Y), with L the
/// regularized joint fractional Laplacian. Limited to NT ≤ cap.
JointSignal denoise_direct(const JointSignal& y, const GftOperator& g, FractionalOrderPair order,
                           RegularizationParams params, std::size_t cap = kDefaultDenseCap);

/// τ_t·(L_T)_α ⊕ τ_g·(L_G)_β.
JointFractionalLaplacian regularized_joint_fractional_laplacian(const Laplacian& l, std::size_t n_time,
                                                                FractionalOrderPair order,
                                                                RegularizationParams params);

/// ‖y − x‖² + xᴴ·L·x.
double tikhonov_objective(const JointSignal& x, const JointSignal& y, const JointFractionalLaplacian& l);

/// 100·‖estimate − clean‖²/‖clean‖².
double mse_percent(const ComplexMatrix& estimate, const ComplexMatrix& clean);

struct SweepGrid {
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> tau_g;
  std::vector<double> tau_t;
};

struct SweepRow {
  double alpha;
  double beta;
  double tau_g;
  double tau_t;
  double mse_percent;
};

struct SweepResult {
  /// Full Cartesian grid, α outermost and τ_t innermost.
  std::vector<SweepRow> rows;
  std::size_t argmin = 0;
  std::array<std::size_t, 4> grid_shape{};
  double noisy_mse_percent = 0.0;

  const SweepRow& best() const { return rows.at(argmin); }
};

/// Evaluates the spectral denoiser over every grid point. Each (α, β) pair
/// transforms the input once; τ values only rescale the filter. Errors are
/// measured in the transform domain, which equals the signal-domain error
/// because the Laplacian-flavor JFRT is unitary.
SweepResult denoise_sweep(const JointSignal& y, const JointSignal& clean, const GftOperator& g,
                          const SweepGrid& grid);

}  // namespace jfrt
