#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "jfrt/linalg.hpp"
#include "jfrt/matrix.hpp"

namespace jfrt {

/// Unitary DFT matrix, (F)_{m,n} = e^{−j2πmn/T}/√T.
ComplexMatrix dft_matrix(std::size_t size);

/// Matrix commuting with the DFT (Dickinson–Steiglitz form): diagonal
/// 2cos(2πn/N) − 4, ones on the cyclic off-diagonals.
ComplexMatrix dft_commuting_matrix(std::size_t size);

/// Discrete Hermite-Gaussian eigenvectors of the unitary DFT.
///
/// Column c of `hermite_vectors` is u_k with k = index_map[c]; F·u_k = (−j)^k·u_k.
/// The index set skips N−1 for even N, so it is {0, …, N−2, N}; for odd N
/// it is {0, …, N−1}.
struct DfrtBasis {
  std::size_t size = 0;
  ComplexMatrix hermite_vectors;
  std::vector<int> index_map;

  /// Basis with eigenvalue phases −πk/2, so power(α) is the order-α DFRT.
  FractionalBasis fractional_basis() const;
};

DfrtBasis dfrt_basis(std::size_t size);

/// Memoized dfrt_basis; safe to call from several threads.
std::shared_ptr<const DfrtBasis> cached_dfrt_basis(std::size_t size);

/// F^α[m,n] = Σ_k u_k[m]·e^{−jπkα/2}·u_k[n].
ComplexMatrix dfrt_matrix(std::size_t size, double alpha);

/// X·(F^α)ᵀ: the order-α DFRT of every row of X.
ComplexMatrix frt_apply_rows(const ComplexMatrix& x, double alpha);

/// Sign changes of a real vector laid out with index 0 at the center
/// (n = −⌊N/2⌋ … ⌈N/2⌉−1). Entries below 1e−12 of the peak are skipped.
std::size_t zero_crossings(std::span<const double> v);

}  // namespace jfrt
