#pragma once

#include <cstdint>

#include "jfrt/matrix.hpp"

namespace jfrt {

/// Y = X + noise with per-entry variance σ² = ‖X‖²/(NT·10^{snr_db/10}).
/// Real inputs get real noise, complex inputs circular complex noise.
/// snr_db = +∞ returns X unchanged.
ComplexMatrix add_gaussian_noise(const ComplexMatrix& x, double snr_db, std::uint64_t seed);

/// Gaussian noise at the same per-entry variance, added only on a
/// Bernoulli(density) mask of entries. The noise values come from the same
/// stream as add_gaussian_noise, so density 1 reproduces it exactly.
ComplexMatrix add_sparse_noise(const ComplexMatrix& x, double density, double snr_db, std::uint64_t seed);

/// Mixes a base seed with a task index into an independent stream seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

}  // namespace jfrt
