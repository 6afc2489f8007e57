#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jfrt/matrix.hpp"

namespace jfrt {

/// Eigenpairs of a Hermitian matrix.
///
/// Columns of `vectors` are orthonormal eigenvectors. `values` ascend; within
/// a cluster of equal values the vectors are ordered by descending
/// lexicographic comparison of their entries. Each vector is scaled so that
/// its largest-magnitude entry is real and positive.
struct SpectralBasis {
  ComplexMatrix vectors;
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
};

/// Diagonalization M = P·diag(exp(log_eigenvalues))·P⁻¹ used to take real
/// powers of a matrix. `inverse` is Pᴴ whenever `unitary_vectors` is set.
struct FractionalBasis {
  ComplexMatrix vectors;
  ComplexMatrix inverse;
  std::vector<cplx> log_eigenvalues;
  bool unitary_vectors = false;

  std::size_t size() const noexcept { return log_eigenvalues.size(); }

  /// P·diag(exp(p·log λ))·P⁻¹.
  ComplexMatrix power(double p) const;
};

struct Tolerances {
  static constexpr double hermitian = 1e-8;   // relative ‖M − Mᴴ‖_F
  static constexpr double unitary = 1e-8;     // ‖U·Uᴴ − I‖_F per unit dimension
  static constexpr double psd_clamp = 1e-10;  // eigenvalues in [−clamp, 0) become 0
  static constexpr double branch_snap = 1e-9;
  static constexpr double max_condition = 1e8;
};

SpectralBasis hermitian_eig(const ComplexMatrix& m);

/// Principal logarithm of a nonzero complex number with the argument taken in
/// [−π, π); arguments within Tolerances::branch_snap of +π map to −π.
cplx principal_log(cplx z);

/// Schur-based diagonalization of a normal matrix (unitary P).
FractionalBasis normal_basis(const ComplexMatrix& m);

/// Diagonalization of an arbitrary square matrix. Normal inputs take the
/// unitary path; otherwise the eigenvector matrix must have condition number
/// at most `max_condition` (Defective otherwise). Zero eigenvalues are rejected
/// because their logarithm is undefined.
FractionalBasis diagonalize(const ComplexMatrix& m, double max_condition = Tolerances::max_condition);

/// Raw eigen-decomposition A = V·diag(λ)·V⁻¹ with the same condition gate.
struct Eigendecomposition {
  ComplexMatrix vectors;
  ComplexMatrix inverse;
  std::vector<cplx> values;
};
Eigendecomposition eigendecompose(const ComplexMatrix& m, double max_condition = Tolerances::max_condition);

/// u^p through the principal branch of each eigenvalue's logarithm.
ComplexMatrix unitary_fractional_power(const ComplexMatrix& u, double p);

/// values_i^p, with values in [−1e−10, 0) clamped to 0 and 0^0 = 1.
std::vector<double> psd_fractional_power(std::span<const double> values, double p);
std::vector<double> psd_fractional_power(const SpectralBasis& basis, double p);

/// Default cap on either dimension of an explicitly materialized Kronecker
/// product.
inline constexpr std::size_t kDefaultKronDimensionCap = 8192;

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t cap = kDefaultKronDimensionCap);

/// a ⊕ b = a ⊗ I_m + I_n ⊗ b for a (n×n) and b (m×m).
ComplexMatrix kron_sum(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t cap = kDefaultKronDimensionCap);

ComplexMatrix inverse(const ComplexMatrix& m);

/// Solves m·x = rhs (LU with partial pivoting).
std::vector<cplx> solve(const ComplexMatrix& m, std::span<const cplx> rhs);

bool is_hermitian(const ComplexMatrix& m, double rel_tol = Tolerances::hermitian);

}  // namespace jfrt
